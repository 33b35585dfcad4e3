class C {
    void m(int x) {
        return;
        x = 1;
        x = 2;
    }
}
