class C {
    void m() {
        for (int i = 0; i < 3;) {
            i = i + 2;
            continue;
        }
    }
}
