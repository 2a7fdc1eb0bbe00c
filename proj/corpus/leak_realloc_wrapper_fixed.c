/* Helper result kept in a temporary until it is known to be valid.
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
	st *tmp;
    st *new = malloc(sizeof(st));
	if(!new) return -1;
	tmp = resize(new, 2*sizeof(st));
	if(tmp)
	{
		new = tmp;
	}
	free(new);
	return 0;
}
