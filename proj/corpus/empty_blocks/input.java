class C {
    void m(int x) {
        {
        }
        ;
        {
            ;
            {
            }
        }
        x = 1;
    }
}
