#include <cstdio>
int main() { std::puts("imd placeholder"); }
