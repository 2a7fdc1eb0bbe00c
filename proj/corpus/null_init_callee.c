/* Pointer set to NULL by another function and dereferenced. */

#include <stdio.h>

int *get_ptr(void) {
	return NULL;
}

int main () {
	int *p = get_ptr();
	*p = 1;
	return 0;
}
