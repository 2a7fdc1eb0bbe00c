/* realloc result stored over the only pointer to the old block.
 */

#include <stdio.h>
#include <stdlib.h>

typedef struct st{
   int value;
}st;

int main(){	
    st *new = malloc(sizeof(st));
	if(!new) return -1;
	new = realloc(new,2*sizeof(st));
	free(new);
	return 0;
}
