#include <math.h>
#include <stdio.h>
#include <string.h>

#include "specert.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    SpecertGraph *g = NULL;
    CHECK(specert_graph_from_graph6("Cs", &g) == SPECERT_STATUS_OK);

    size_t n = 0, m = 0;
    CHECK(specert_graph_order(g, &n) == SPECERT_STATUS_OK && n == 4);
    CHECK(specert_graph_edge_count(g, &m) == SPECERT_STATUS_OK && m == 3);

    double rho = 0.0;
    CHECK(specert_spectral_radius(g, 0.0, 0.0, &rho) == SPECERT_STATUS_OK);
    CHECK(fabs(rho - sqrt(3.0)) < 1e-9);

    char *cert = NULL;
    CHECK(specert_find_k_tree(g, 2, &cert) == SPECERT_STATUS_OK && cert == NULL);
    CHECK(specert_find_win_violator(g, 2, 0, &cert) == SPECERT_STATUS_OK);
    CHECK(cert != NULL && strcmp(cert, "{\"type\":\"win_violator\",\"data\":[0]}") == 0);
    specert_string_free(cert);
    specert_graph_free(g);

    SpecertBipartite *b = NULL;
    CHECK(specert_matching_extremal(3, 1, &b) == SPECERT_STATUS_OK);
    CHECK(specert_certify_matching(b, &cert) == SPECERT_STATUS_OK);
    CHECK(strstr(cert, "hall_violator") != NULL);
    specert_string_free(cert);
    specert_bipartite_free(b);

    CHECK(specert_ktree_extremal(3, 2, &g) == SPECERT_STATUS_INVALID_INPUT);
    CHECK(specert_last_error_message() != NULL);
    puts("ok");
    return 0;
}
