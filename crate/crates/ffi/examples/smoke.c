/* Build: cargo build -p orbital-chromatic-ffi
 *        cc crates/ffi/examples/smoke.c -Icrates/ffi/include \
 *           target/debug/liborbital_chromatic_ffi.a -lpthread -ldl -lm -o smoke
 */
#include <stdio.h>

#include "orbital_chromatic.h"

int main(void) {
    OcGraph *cycle = NULL;
    OcGroup *dihedral = NULL;
    OcPoly *poly = NULL;

    if (oc_graph_cycle(6, &cycle) != OC_STATUS_OK ||
        oc_group_cycle_automorphisms(6, &dihedral) != OC_STATUS_OK ||
        oc_orbital_by_definition(cycle, dihedral, &poly) != OC_STATUS_OK) {
        fprintf(stderr, "error: %s\n", oc_last_error_message());
        return 1;
    }

    char *text = oc_poly_render(poly, true);
    char *json = oc_poly_to_json(poly);
    char *at3 = oc_poly_eval(poly, 3);
    printf("%s\n%s\nat 3: %s\n", text, json, at3);
    oc_string_free(text);
    oc_string_free(json);
    oc_string_free(at3);

    uint64_t orbits = 0;
    oc_count_coloring_orbits(cycle, dihedral, 3, &orbits);
    printf("orbits with 3 colors: %llu\n", (unsigned long long)orbits);

    if (oc_graph_cycle(0, &cycle) != OC_STATUS_OK) {
        printf("expected failure: %s\n", oc_last_error_message());
    }

    oc_poly_free(poly);
    oc_group_free(dihedral);
    oc_graph_free(cycle);
    return 0;
}
