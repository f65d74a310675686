#include "braidgal/examples.hpp"
int main(){return 0;}
