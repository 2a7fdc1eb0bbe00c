/* Field released before the structure that owns it.
 */

#include <stdio.h>
#include <stdlib.h>

typedef struct st{
   int *value;
}st;

int main(){	
    st *new = malloc(sizeof(st));
	if(!new) return -1;
	new->value = malloc(sizeof(int));
	free(new->value);
	free(new);
	return 0;
}
