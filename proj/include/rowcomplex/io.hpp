#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rowcomplex/complex.hpp"
#include "rowcomplex/fsm.hpp"
#include "rowcomplex/partition.hpp"
#include "rowcomplex/split.hpp"

namespace rowcomplex {

/// A parsed set file: line 1 is w, every further nonempty line one set of
/// whitespace-separated 1-based positions; '#' starts a comment. The same
/// format serves facets, non-face generators and transactions.
struct SetFile {
    int w = 0;
    std::vector<FaceSet> sets;
};

SetFile parse_set_file(std::istream& in, const std::string& what);
SetFile load_set_file(const std::string& path);

std::string format_set_file(int w, const std::vector<FaceSet>& sets);

/// Weights file: one `position weight` pair per nonempty line, '#' comments.
/// Every position 1..w must be assigned exactly once.
Weights parse_weights(std::istream& in, int w);
Weights load_weights(const std::string& path, int w);

/// Text dump: header `w=<w> kind=<E|N> rows=<R>`, then one rendered row per
/// line.
std::string format_partition(const Partition& p);

/// Parses a comma-separated position list like "6,7,10,11".
FaceSet parse_position_list(const std::string& text);

}  // namespace rowcomplex
