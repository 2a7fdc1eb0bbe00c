/* realloc reached through a helper, result stored over the old pointer.
 */

#include <stdio.h>
#include <stdlib.h>

typedef struct st{
   int value;
}st;

void *resize(void *ptr, int size){
	return realloc(ptr, size);
}

int main(){	
    st *new = malloc(sizeof(st));
	if(!new) return -1;
	new = resize(new, 2*sizeof(st));
	free(new);
	return 0;
}
