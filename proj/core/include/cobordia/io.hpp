// File formats: complex JSON, point cloud readers, bars CSV, representative
// JSON and the persistence-diagram SVG.

#ifndef COBORDIA_IO_HPP
#define COBORDIA_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cobordia/alpha.hpp"
#include "cobordia/cell_complex.hpp"
#include "cobordia/cobordism.hpp"
#include "cobordia/kernel_persistence.hpp"

namespace cobordia {

/// Parses {"cells": [{"id", "dim", "boundary", "f", "label"}...]} and
/// rejects complexes failing validation (throws ValidationError) or
/// malformed documents (throws Error).
FilteredComplex load_complex_json(std::istream& in);
FilteredComplex load_complex_json_file(const std::string& path);

std::string complex_to_json(const FilteredComplex& complex);
void save_complex_json_file(const FilteredComplex& complex, const std::string& path);

/// CSV rows `x,y[,z]`; lines starting with '#' and a non-numeric header line
/// are skipped.
PointCloud load_point_cloud_csv(std::istream& in);
/// XYZ chemistry format: count line, comment line, then `element x y z`
/// rows; the element column is ignored.
PointCloud load_point_cloud_xyz(std::istream& in);
/// Dispatches on the file extension (.xyz vs anything else as CSV).
PointCloud load_point_cloud_file(const std::string& path);

std::string point_cloud_to_csv(const PointCloud& cloud);

/// degree,birth,death,birth_cell,death_cell,case_birth,case_death with the
/// `inf` literal for infinite deaths, sorted by (degree, birth, death).
std::string bars_to_csv(const std::vector<CobordismPair>& pairs);

/// degree,birth,death,birth_cell,death_cell,block with an empty death field
/// for infinite kernel bars.
std::string kernel_bars_to_csv(const std::vector<const KernelPairs*>& blocks);

/// JSON list of bars with their representative chains as lists of cell ids;
/// finite bars also carry the boundary of the pre-death representative.
std::string representatives_to_json(const std::vector<CobordismPair>& pairs,
                                    const FilteredComplex& complex);

/// Square persistence diagram; infinite bars sit on a dashed horizon at
/// 1.05x the maximal finite value.
std::string persistence_diagram_svg(const std::vector<CobordismPair>& pairs);

/// Canonical number formatting used in all text outputs.
std::string format_value(double v);

}  // namespace cobordia

#endif
