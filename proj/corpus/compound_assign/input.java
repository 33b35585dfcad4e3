class C {
    int m(int a) {
        int b = 10;
        b += a;
        b -= 1;
        b *= 2;
        b /= 3;
        b %= 4;
        return b;
    }
}
