#include "lfds/analyze.hpp"
int main(){return 0;}
