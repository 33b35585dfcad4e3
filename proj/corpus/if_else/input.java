class C {
    void m(int a) {
        if (a > 0) {
            a = 1;
        } else {
            a = 2;
        }
        return;
    }
}
