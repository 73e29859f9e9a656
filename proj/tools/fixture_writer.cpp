// Writes the JSON fixtures consumed by the CLI tests: the path complex Z, the
// permutation prop at bound 2 (with its presentation and generator values),
// the free (2,1)-generator prop, and algebra files for each.
#include <iostream>
#include <string>

#include "propcalc/fixtures.hpp"
#include "propcalc/json_io.hpp"
#include "propcalc/path_object.hpp"

using namespace propcalc;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: fixture-writer <output-dir>\n";
        return 2;
    }
    std::string dir = argv[1];
    auto path = [&](const char* name) { return dir + "/" + name; };

    write_json_file(path("Z.json"), complex_to_json(make_Z().z), false);
    write_json_file(path("Q.json"), complex_to_json(cx_Q()), false);
    write_json_file(path("Q2.json"), complex_to_json(cx_Q2()), false);
    write_json_file(path("two_term.json"), complex_to_json(cx_two_term()), false);
    write_json_file(path("h2.json"), complex_to_json(cx_h2()), false);

    auto perm = make_perm_prop({2, -1});
    Json pj = prop_to_json(*perm, nullptr);
    pj["presentation"] =
        presentation_to_json(perm_prop_presentation(*perm), *perm, {});
    write_json_file(path("perm2.prop.json"), pj, false);
    write_json_file(path("perm2.q.algebra.json"),
                    algebra_to_json(perm_prop_algebra(perm, cx_Q())), false);
    write_json_file(path("perm2.q2.algebra.json"),
                    algebra_to_json(perm_prop_algebra(perm, cx_Q2())), false);

    // Bound A=2: large enough for a nontrivial lift and zigzag, small enough
    // that the presentation words (which route through (3,2) for three-leaf
    // trees) stay within bound.
    Free21Fixture fx = make_free21({2, -1});
    Json fj = prop_to_json(*fx.prop, nullptr);
    fj["presentation"] = presentation_to_json(fx.presentation, *fx.prop, fx.gen_values);
    write_json_file(path("free21.prop.json"), fj, false);
    write_json_file(path("free21.q.algebra.json"), algebra_to_json(free21_q_algebra(fx)),
                    false);
    write_json_file(path("free21.q2.algebra.json"), algebra_to_json(free21_q2_algebra(fx)),
                    false);
    return 0;
}
