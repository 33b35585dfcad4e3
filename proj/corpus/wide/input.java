class C {
    int wide(int a, int b) {
        int c = a + b;
        int d = a - b;
        int e = a * b;
        int f = a / 2;
        int g = b % 3;
        c = c + d;
        d = d + e;
        e = e + f;
        f = f + g;
        g = g + c;
        return c + d + e + f + g;
    }
}
