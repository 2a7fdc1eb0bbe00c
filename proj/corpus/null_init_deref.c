/* Pointer initialized to NULL and dereferenced in the same function. */

#include <stdio.h>

int main () {
	int *p = NULL;
	*p = 1;
	return 0;
}
