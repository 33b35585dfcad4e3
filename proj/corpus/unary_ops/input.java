class C {
    int m(int a) {
        int b = -a;
        b++;
        --b;
        b = -(-a) + !false;
        return b;
    }
}
