#include <stdio.h>
#include <string.h>

#include "fanplan.h"

#define CHECK(cond)                                                  \
    do {                                                             \
        if (!(cond)) {                                               \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                \
        }                                                            \
    } while (0)

int main(void) {
    FanplanGraph *g = NULL;
    CHECK(fanplan_graph_from_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", &g) == FANPLAN_STATUS_OK);
    CHECK(fanplan_graph_edge_count(g) == 6);

    FanplanAnswer a;
    size_t order[4];
    uint64_t explored = 0;
    CHECK(fanplan_decide_outer(g, 0, &a, order, 4, &explored) == FANPLAN_STATUS_OK);
    CHECK(a == FANPLAN_ANSWER_YES);
    CHECK(order[0] == 0);
    fanplan_graph_free(g);

    FanplanDrawing *d = NULL;
    CHECK(fanplan_gen_k7(&d) == FANPLAN_STATUS_OK);
    size_t violations = 99;
    CHECK(fanplan_drawing_validate(d, &violations) == FANPLAN_STATUS_OK);
    CHECK(violations == 0);
    CHECK(fanplan_drawing_max_crossings_per_edge(d) == 2);

    char *json = fanplan_drawing_to_json(d);
    CHECK(json != NULL);
    FanplanDrawing *back = NULL;
    CHECK(fanplan_drawing_from_json(json, &back) == FANPLAN_STATUS_OK);
    CHECK(fanplan_drawing_crossing_count(back) == fanplan_drawing_crossing_count(d));
    fanplan_string_free(json);
    fanplan_drawing_free(back);
    fanplan_drawing_free(d);

    CHECK(fanplan_graph_from_edge_list("3 1\n0 x\n", &g) == FANPLAN_STATUS_PARSE_ERROR);
    CHECK(strstr(fanplan_last_error(), "line 2") != NULL);

    puts("ok");
    return 0;
}
