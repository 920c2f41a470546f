#include <iostream>

int main() {
  std::cout << "curvelift (cli under construction)\n";
  return 0;
}
