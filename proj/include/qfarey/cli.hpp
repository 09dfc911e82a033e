#pragma once

// Command-line front end. Exit status: 0 on success, 2 on usage errors (the
// grammar is printed to err), 1 on domain errors (the error kind is printed)
// and on failed verification suites.

#include <ostream>
#include <string>
#include <vector>

namespace qfarey {

inline constexpr const char* kGrammar =
    "usage: qfarey <subcommand> [args] [--format json|svg] [--flavor sharp|flat] [--depth N] [--order N]\n"
    "              [--period c1,c2,...] [--out FILE]\n"
    "  cf <r>/<s>                          regular and negative continued fractions\n"
    "  qrat <r>/<s> [--flavor F]           q-rational (default flavor: flat)\n"
    "  farey <r>/<s> [--flavor F]          Farey parents and the q-deformed Farey sum\n"
    "  tess [--depth N | --alpha <r>/<s>] [--flavor F] [--format json|svg]\n"
    "                                      weighted tessellation or triangulation\n"
    "  jones <r>/<s> [--abs]               Jones polynomial of the rational knot\n"
    "  occ-hom <r>/<s>                     occ_q and hom_q of X_alpha with its twist word\n"
    "  quad --period c1,... [--order N] [--form surd|occ|hom|series]\n"
    "                                      q-deformed quadratic irrational\n"
    "  series <r>/<s> [--flavor F] [--order N]\n"
    "  series --period c1,... [--order N] [--max-periods N]\n"
    "                                      power series at q = 0 (periods: by convergents)\n"
    "  verify thm2_5|farey_sums|jones|corollary5_4|quad|all\n";

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfarey
