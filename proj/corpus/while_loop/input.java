class C {
    int m() {
        int a = 0;
        while (a < 3) {
            a = a + 1;
        }
        return a;
    }
}
