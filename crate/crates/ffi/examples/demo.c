#include <stdio.h>
#include "solgraph.h"

int main(void) {
    SgGroup *g = NULL;
    if (sg_group_from_name("PSL2-7", &g) != SG_STATUS_OK) {
        fprintf(stderr, "%s\n", sg_last_error_message());
        return 1;
    }
    uint64_t order = 0, size = 0;
    bool is_subgroup = false;
    sg_group_order(g, &order);
    if (sg_solubilizer(g, "(1 2 8)(3 7 5)", &size, &is_subgroup) != SG_STATUS_OK) {
        fprintf(stderr, "%s\n", sg_last_error_message());
        sg_group_free(g);
        return 1;
    }
    printf("|G| = %llu, |Sol(x)| = %llu, subgroup: %s\n",
           (unsigned long long)order, (unsigned long long)size, is_subgroup ? "yes" : "no");
    sg_group_free(g);
    return 0;
}
