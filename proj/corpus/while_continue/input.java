class C {
    void m(int c) {
        while (c > 0) {
            continue;
        }
    }
}
