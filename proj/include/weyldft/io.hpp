// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <complex>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "weyldft/grids.hpp"
#include "weyldft/orbitfn.hpp"
#include "weyldft/rootdata.hpp"
#include "weyldft/transforms.hpp"
#include "weyldft/weyl.hpp"

namespace weyldft {

using nlohmann::json;

// Exact coordinates are serialized as "p/q" strings so that files round-trip
// losslessly; the floating-point orthonormal coordinates are for plotting.

inline json ratvec_to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

inline RatVec ratvec_from_json(const json& a) {
  RatVec v;
  for (const auto& e : a) v.push_back(Rational::parse(e.get<std::string>()));
  return v;
}

inline json point_set_to_json(const RootSystemData& d, const OrthonormalBasis& ob,
                              const PointSet& set) {
  json out;
  out["algebra"] = set.algebra.name();
  out["M"] = set.M;
  out["type"] = set.type.name();
  out["kind"] = "points";
  json entries = json::array();
  for (const auto& e : set.entries) {
    json rec;
    rec["u"] = ratvec_to_json(e.point.u);
    rec["orth"] = orthonormal_point(d, ob, e.point.u);
    rec["eps"] = e.eps;
    rec["reflected"] = e.point.reflected;
    if (e.point.reflected) rec["preimage"] = ratvec_to_json(e.point.preimage);
    entries.push_back(std::move(rec));
  }
  out["entries"] = std::move(entries);
  return out;
}

inline json label_set_to_json(const RootSystemData& d, const OrthonormalBasis& ob,
                              const LabelSet& set) {
  json out;
  out["algebra"] = set.algebra.name();
  out["M"] = set.M;
  out["type"] = set.type.name();
  out["kind"] = "labels";
  json entries = json::array();
  for (const auto& e : set.entries) {
    json rec;
    rec["t"] = e.label.t;
    rec["orth"] = orthonormal_label(d, ob, e.label.t);
    rec["h"] = e.h;
    rec["reflected"] = e.label.reflected;
    if (e.label.reflected) rec["preimage"] = e.label.preimage;
    entries.push_back(std::move(rec));
  }
  out["entries"] = std::move(entries);
  return out;
}

inline std::string point_set_to_csv(const RootSystemData& d, const OrthonormalBasis& ob,
                                    const PointSet& set) {
  std::ostringstream os;
  os << "index";
  for (int i = 1; i <= d.n; ++i) os << ",u" << i;
  for (int i = 1; i <= d.n; ++i) os << ",x" << i;
  os << ",eps,reflected\n";
  for (std::size_t k = 0; k < set.entries.size(); ++k) {
    const auto& e = set.entries[k];
    os << k;
    for (const auto& r : e.point.u) os << ',' << r.str();
    for (double x : orthonormal_point(d, ob, e.point.u)) os << ',' << x;
    os << ',' << e.eps << ',' << (e.point.reflected ? 1 : 0) << '\n';
  }
  return os.str();
}

inline std::string label_set_to_csv(const RootSystemData& d, const OrthonormalBasis& ob,
                                    const LabelSet& set) {
  std::ostringstream os;
  os << "index";
  for (int i = 1; i <= d.n; ++i) os << ",t" << i;
  for (int i = 1; i <= d.n; ++i) os << ",x" << i;
  os << ",h,reflected\n";
  for (std::size_t k = 0; k < set.entries.size(); ++k) {
    const auto& e = set.entries[k];
    os << k;
    for (long long t : e.label.t) os << ',' << t;
    for (double x : orthonormal_label(d, ob, e.label.t)) os << ',' << x;
    os << ',' << e.h << ',' << (e.label.reflected ? 1 : 0) << '\n';
  }
  return os.str();
}

// --------------------------------------------------------------------------
// Sample and spectrum files
// --------------------------------------------------------------------------

struct SampleFile {
  AlgebraId algebra;
  long long M = 0;
  FunctionType type;
  Kernel kernel = Kernel::Complex;
  std::vector<RatVec> points;                  // omega^vee coordinates
  std::vector<std::complex<double>> values;    // imag = 0 for hartley
};

inline json sample_file_to_json(const SampleFile& f) {
  json out;
  out["algebra"] = f.algebra.name();
  out["M"] = f.M;
  out["type"] = f.type.name();
  out["kernel"] = f.kernel == Kernel::Complex ? "complex" : "hartley";
  json pts = json::array();
  for (const auto& p : f.points) pts.push_back(ratvec_to_json(p));
  out["points"] = std::move(pts);
  json vals = json::array();
  for (const auto& v : f.values) {
    if (f.kernel == Kernel::Complex)
      vals.push_back(json::array({v.real(), v.imag()}));
    else
      vals.push_back(v.real());
  }
  out["values"] = std::move(vals);
  return out;
}

inline SampleFile sample_file_from_json(const json& in) {
  SampleFile f;
  f.algebra = parse_algebra(in.at("algebra").get<std::string>());
  f.M = in.at("M").get<long long>();
  f.type = parse_function_type(in.at("type").get<std::string>());
  f.kernel = parse_kernel(in.at("kernel").get<std::string>());
  for (const auto& p : in.at("points")) f.points.push_back(ratvec_from_json(p));
  for (const auto& v : in.at("values")) {
    if (v.is_array())
      f.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    else
      f.values.emplace_back(v.get<double>(), 0.0);
  }
  if (f.points.size() != f.values.size())
    throw std::invalid_argument("sample file: point and value counts differ");
  return f;
}

struct SpectrumFile {
  AlgebraId algebra;
  long long M = 0;
  FunctionType type;
  Kernel kernel = Kernel::Complex;
  std::vector<IntVec> labels;                  // omega coordinates
  std::vector<std::complex<double>> coeffs;
};

inline json spectrum_file_to_json(const SpectrumFile& f) {
  json out;
  out["algebra"] = f.algebra.name();
  out["M"] = f.M;
  out["type"] = f.type.name();
  out["kernel"] = f.kernel == Kernel::Complex ? "complex" : "hartley";
  out["labels"] = f.labels;
  json vals = json::array();
  for (const auto& v : f.coeffs) {
    if (f.kernel == Kernel::Complex)
      vals.push_back(json::array({v.real(), v.imag()}));
    else
      vals.push_back(v.real());
  }
  out["coeffs"] = std::move(vals);
  return out;
}

inline SpectrumFile spectrum_file_from_json(const json& in) {
  SpectrumFile f;
  f.algebra = parse_algebra(in.at("algebra").get<std::string>());
  f.M = in.at("M").get<long long>();
  f.type = parse_function_type(in.at("type").get<std::string>());
  f.kernel = parse_kernel(in.at("kernel").get<std::string>());
  for (const auto& l : in.at("labels")) f.labels.push_back(l.get<IntVec>());
  for (const auto& v : in.at("coeffs")) {
    if (v.is_array())
      f.coeffs.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    else
      f.coeffs.emplace_back(v.get<double>(), 0.0);
  }
  if (f.labels.size() != f.coeffs.size())
    throw std::invalid_argument("spectrum file: label and coefficient counts differ");
  return f;
}

/// Checks that a sample file's point list is exactly the grid of its header
/// (order and coordinates); prevents silent misalignment of value vectors.
inline void validate_against_grid(const SampleFile& f, const PointSet& grid) {
  if (f.points.size() != grid.size())
    throw std::invalid_argument("sample file does not match the generated grid (size)");
  for (std::size_t i = 0; i < f.points.size(); ++i)
    if (f.points[i] != grid.entries[i].point.u)
      throw std::invalid_argument("sample file does not match the generated grid (coordinates)");
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

inline void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

// --------------------------------------------------------------------------
// Raster export (rank-2 algebras)
// --------------------------------------------------------------------------

struct RasterRow {
  double x = 0.0, y = 0.0;       // orthonormal coordinates
  std::complex<double> value;    // imag = 0 for hartley
  int flag = 0;                  // 0 outside, 1 in F^{sigma~,sigma}, 2 on H^{sigma~,sigma}
};

/// Samples the function with label t over an R x R rational grid covering the
/// omega^vee bounding box of the composite fundamental domain. Rational grid
/// coordinates keep the domain/boundary flags exact.
inline std::vector<RasterRow> compute_raster(const RootSystemData& d, const WeylGroup& g,
                                             FunctionType type, const IntVec& t, Kernel kernel,
                                             int resolution) {
  if (d.n != 2) throw std::invalid_argument("raster output is limited to rank-2 algebras");
  if (resolution < 1) throw std::invalid_argument("resolution must be positive");
  if (!type.available(d.algebra))
    throw std::invalid_argument("function type " + type.name() + " undefined for " +
                                d.algebra.name());
  const OrthonormalBasis ob = orthonormal_basis(d);
  const SignHom si = type.sigma;
  const int refl = si == SignHom::One ? 0 : choose_reflection(d, si, Side::Primal);
  const auto Rsi =
      si == SignHom::One ? std::vector<int>{} : negative_generators(d, si, /*dual=*/false);

  // omega^vee bounding box of F and (if present) its reflected sheet
  std::vector<RatVec> vertices;
  vertices.push_back(RatVec(2, Rational(0)));
  for (int i = 0; i < 2; ++i) {
    RatVec v(2, Rational(0));
    v[i] = Rational(1, d.marks[i]);
    vertices.push_back(v);
  }
  if (si != SignHom::One) {
    const std::size_t base = vertices.size();
    for (std::size_t k = 0; k < base; ++k)
      vertices.push_back(detail::apply_generator(d, refl, vertices[k], Side::Primal));
  }
  RatVec lo = vertices[0], hi = vertices[0];
  for (const auto& v : vertices)
    for (int i = 0; i < 2; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (hi[i] < v[i]) hi[i] = v[i];
    }

  const LabelOrbit orbit = make_label_orbit(d, g, type, t);
  std::vector<RasterRow> rows;
  rows.reserve(static_cast<std::size_t>(resolution) * resolution);
  for (int j = 0; j < resolution; ++j)
    for (int i = 0; i < resolution; ++i) {
      RatVec y(2);
      const Rational si_frac = resolution == 1 ? Rational(0) : Rational(i, resolution - 1);
      const Rational sj_frac = resolution == 1 ? Rational(0) : Rational(j, resolution - 1);
      y[0] = lo[0] + (hi[0] - lo[0]) * si_frac;
      y[1] = lo[1] + (hi[1] - lo[1]) * sj_frac;

      RasterRow row;
      const auto orth = orthonormal_point(d, ob, y);
      row.x = orth[0];
      row.y = orth[1];
      const PointCoords pc = make_point_coords(d, y);
      if (kernel == Kernel::Complex)
        row.value = psi_value(orbit, pc);
      else
        row.value = zeta_value(orbit, pc);

      if (in_fundamental(d, y, Side::Primal)) {
        row.flag = in_boundary_H(d, y, type, Side::Primal) ? 2 : 1;
      } else if (si != SignHom::One) {
        const RatVec q = detail::apply_generator(d, refl, y, Side::Primal);
        if (in_fundamental(d, q, Side::Primal) &&
            !detail::mask_hits(wall_mask(d, q, Side::Primal), Rsi)) {
          // y lies on the reflected sheet r_sigma F^sigma
          row.flag = in_boundary_H(d, q, type, Side::Primal) ? 2 : 1;
        }
      }
      rows.push_back(row);
    }
  return rows;
}

inline std::string raster_to_csv(const std::vector<RasterRow>& rows, Kernel kernel) {
  std::ostringstream os;
  os.precision(17);
  if (kernel == Kernel::Complex)
    os << "x,y,re,im,flag\n";
  else
    os << "x,y,value,flag\n";
  for (const auto& r : rows) {
    os << r.x << ',' << r.y << ',' << r.value.real();
    if (kernel == Kernel::Complex) os << ',' << r.value.imag();
    os << ',' << r.flag << '\n';
  }
  return os.str();
}

}  // namespace weyldft
