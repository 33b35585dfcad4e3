class C {
    void m() {
    }
}
