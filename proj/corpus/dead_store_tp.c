/* Pointer initialized to an address, overwritten before any read. */

#include <stdio.h>

int main () {
	int a = 20;
	int b = 10;
	int *ptr_a = &a;
	
	ptr_a = &b;
	printf("Value: %d\n", *ptr_a);

   	return 0;
}
