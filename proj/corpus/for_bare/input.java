class C {
    void m(int x) {
        for (;;) {
            x = x - 1;
            if (x < 0) {
                break;
            }
        }
        x = 7;
    }
}
