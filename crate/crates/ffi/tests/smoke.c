#include <stdio.h>
#include "loopreps.h"

int main(void) {
    LrGroup *g = NULL;
    size_t rank = 0, order = 0, size = 0;
    uint32_t f = 0, b = 0;
    if (lr_group_new("Spin8", &g) != LR_STATUS_OK) return 1;
    if (lr_group_rank(g, &rank) || lr_group_order(g, &order)) return 2;
    if (lr_alcove_size(g, 2, &size) || lr_levels(g, "full", &f, &b)) return 3;
    int64_t in[4] = {0, 0, 0, 0}, out[4];
    if (lr_act(g, 1, 1, in, 4, out) != LR_STATUS_OK || out[0] != 1) return 4;
    in[0] = 2;
    if (lr_act(g, 1, 1, in, 4, out) != LR_STATUS_OUTSIDE_ALCOVE) return 5;
    lr_group_free(g);
    printf("D4 %zu %zu %u %u\n", rank, size, f, b);
    return order == 4 ? 0 : 6;
}
