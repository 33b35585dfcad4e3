class C {
    int f(int a) {
        int b = a + 1;
        int c = b * 2;
        b = c - a;
        return b;
    }
}
