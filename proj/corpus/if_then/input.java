class C {
    void m(int a) {
        if (a > 0) {
            a = 1;
        }
        a = 2;
    }
}
