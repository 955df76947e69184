#include <cstdio>
int main(){ std::puts("hec cli stub"); return 0; }
