/* Local variable left alone, heap block released. */

#include <stdlib.h>

int main(){
	int *p = malloc(sizeof(int));
	free(p);
	return 0;
}
