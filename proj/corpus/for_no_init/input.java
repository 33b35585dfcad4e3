class C {
    void m(int i) {
        for (; i < 3; i = i + 1) {
            f0(i);
        }
    }
}
