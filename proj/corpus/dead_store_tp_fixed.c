/* Pointer initialized with the address it is read through. */

#include <stdio.h>

int main () {
	int b = 10;
	int *ptr_a = &b;
	
	printf("Value: %d\n", *ptr_a);

   	return 0;
}
