#include <iostream>
int main() { std::cout << "wsf placeholder\n"; return 0; }
