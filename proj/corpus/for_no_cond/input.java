class C {
    void m(int x) {
        for (int i = 0; ; i = i + 1) {
            if (i > 9) {
                break;
            }
            x = x + i;
        }
        x = 0;
    }
}
