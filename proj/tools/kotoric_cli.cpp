#include "kotoric/kotoric.hpp"
int main(){return 0;}
