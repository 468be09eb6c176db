/* Minimal consumer of the nestex C ABI: builds the partition lattice on four
 * points, takes its minimal building set, reads off the face vectors of the
 * nested set complex, and runs both certificate pipelines. */
#include "nestex.h"
#include <assert.h>
#include <stdio.h>

int main(void) {
    NxLattice *l = NULL;
    assert(nx_lattice_partition(4, &l) == NxStatus_Ok);
    assert(nx_lattice_size(l) == 15);

    NxBuilt *b = NULL;
    assert(nx_built_new(l, "min", &b) == NxStatus_Ok);

    NxComplex *c = NULL;
    assert(nx_nested_complex(b, false, &c) == NxStatus_Ok);
    assert(nx_complex_dim(c) == 1);
    assert(nx_complex_facet_count(c) == 15);

    int64_t v[8];
    size_t n = 0;
    assert(nx_complex_f_vector(c, v, 8, &n) == NxStatus_Ok);
    assert(n == 3 && v[0] == 1 && v[1] == 10 && v[2] == 15);
    assert(nx_complex_h_vector(c, v, 8, &n) == NxStatus_Ok);
    assert(n == 3 && v[0] == 1 && v[1] == 8 && v[2] == 6);

    assert(nx_vd_certify(b) == NxStatus_Ok);
    assert(nx_ced_certify(b) == NxStatus_Ok);

    assert(nx_second_eulerian(3, v, 8, &n) == NxStatus_Ok);
    assert(n == 3 && v[0] == 1 && v[1] == 8 && v[2] == 6);

    assert(nx_lattice_partition(0, &l) == NxStatus_InvalidArgument);
    printf("nestex capi smoke passed\n");

    nx_complex_free(c);
    nx_built_free(b);
    nx_lattice_free(l);
    return 0;
}
