class C {
    int m(int x) {
        x = 1;
        x = 1;
        int y = x + 1;
        return y;
    }
}
