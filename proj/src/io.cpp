#include "qg/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qg {

namespace {

enum class Section { None, Mult, Coproduct, Star, Antipode, Counit, Haar };

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ParsedDefinition parse_definition(std::istream& in) {
  ParsedDefinition out;
  auto& t = out.tensors;
  t.dim = -1;
  Section sec = Section::None;
  bool saw_mult = false, saw_coproduct = false, saw_star = false,
       saw_antipode = false, saw_counit = false, saw_haar = false;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;

    auto need_dim = [&] {
      if (t.dim <= 0) throw ParseError("DIM must appear before tensor sections", line_no);
    };
    auto check_index = [&](int i) {
      if (i < 0 || i >= t.dim) throw ParseError("basis index out of range", line_no);
    };

    if (first == "NAME") {
      std::string rest;
      std::getline(ls, rest);
      const auto pos = rest.find_first_not_of(" \t");
      t.name = (pos == std::string::npos) ? "" : rest.substr(pos);
      continue;
    }
    if (first == "DIM") {
      if (!(ls >> t.dim) || t.dim <= 0) throw ParseError("bad DIM value", line_no);
      t.mult.assign(static_cast<size_t>(t.dim) * t.dim * t.dim, cplx(0.0));
      t.coproduct.assign(static_cast<size_t>(t.dim) * t.dim * t.dim, cplx(0.0));
      t.star = Mat::Zero(t.dim, t.dim);
      t.antipode = Mat::Zero(t.dim, t.dim);
      t.counit = Vec::Zero(t.dim);
      t.haar = Vec::Zero(t.dim);
      continue;
    }
    if (first == "BASIS") {
      need_dim();
      t.labels.clear();
      std::string lab;
      while (ls >> lab) t.labels.push_back(lab);
      if (static_cast<int>(t.labels.size()) != t.dim)
        throw ParseError("BASIS must list exactly DIM labels", line_no);
      continue;
    }
    if (first == "MULT") { need_dim(); sec = Section::Mult; saw_mult = true; continue; }
    if (first == "COPRODUCT") { need_dim(); sec = Section::Coproduct; saw_coproduct = true; continue; }
    if (first == "STAR") { need_dim(); sec = Section::Star; saw_star = true; continue; }
    if (first == "ANTIPODE") { need_dim(); sec = Section::Antipode; saw_antipode = true; continue; }
    if (first == "COUNIT") { need_dim(); sec = Section::Counit; saw_counit = true; continue; }
    if (first == "HAAR") { need_dim(); sec = Section::Haar; saw_haar = true; continue; }

    // Otherwise the first token must be numeric: an entry of the current section.
    int i = 0;
    try {
      size_t used = 0;
      i = std::stoi(first, &used);
      if (used != first.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("unknown section or malformed entry '" + first + "'", line_no);
    }

    switch (sec) {
      case Section::None:
        throw ParseError("entry outside of any section", line_no);
      case Section::Mult:
      case Section::Coproduct: {
        int j, k;
        double re, im;
        if (!(ls >> j >> k >> re >> im))
          throw ParseError("expected 'i j k re im'", line_no);
        check_index(i); check_index(j); check_index(k);
        auto& tensor = (sec == Section::Mult) ? t.mult : t.coproduct;
        tensor[(static_cast<size_t>(i) * t.dim + j) * t.dim + k] = cplx(re, im);
        break;
      }
      case Section::Star:
      case Section::Antipode: {
        int k;
        double re, im;
        if (!(ls >> k >> re >> im)) throw ParseError("expected 'i k re im'", line_no);
        check_index(i); check_index(k);
        auto& mat = (sec == Section::Star) ? t.star : t.antipode;
        mat(k, i) = cplx(re, im);
        break;
      }
      case Section::Counit:
      case Section::Haar: {
        double re, im;
        if (!(ls >> re >> im)) throw ParseError("expected 'i re im'", line_no);
        check_index(i);
        auto& v = (sec == Section::Counit) ? t.counit : t.haar;
        v(i) = cplx(re, im);
        break;
      }
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens on entry line", line_no);
  }

  if (t.dim <= 0) throw ParseError("missing DIM", 0);
  if (t.labels.empty()) {
    t.labels.resize(t.dim);
    for (int b = 0; b < t.dim; ++b) t.labels[b] = "b" + std::to_string(b);
  }
  if (!saw_mult) throw ParseError("missing MULT section", line_no);
  if (!saw_coproduct) throw ParseError("missing COPRODUCT section", line_no);
  if (!saw_star) throw ParseError("missing STAR section", line_no);
  if (!saw_antipode) throw ParseError("missing ANTIPODE section", line_no);
  if (!saw_counit) throw ParseError("missing COUNIT section", line_no);
  out.haar_given = saw_haar;
  return out;
}

FiniteQuantumGroup load_definition_stream(std::istream& in, const Tolerance& tol) {
  ParsedDefinition parsed = parse_definition(in);
  if (!parsed.haar_given) {
    // Build once to derive the unit, then recover the Haar state.
    FiniteQuantumGroup::Tensors copy = parsed.tensors;
    copy.haar = copy.counit;  // placeholder, shape only
    FiniteQuantumGroup probe = FiniteQuantumGroup::from_tensors(std::move(copy), tol);
    parsed.tensors.haar = solve_haar_state(parsed.tensors, probe.unit(), tol);
  }
  FiniteQuantumGroup g = FiniteQuantumGroup::from_tensors(std::move(parsed.tensors), tol);
  AxiomReport rep = verify_axioms(g, tol);
  if (!rep.all_pass()) throw AxiomFailureError(std::move(rep));
  return g;
}

FiniteQuantumGroup load_definition(const std::string& path, const Tolerance& tol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return load_definition_stream(in, tol);
}

std::string serialize_definition(const FiniteQuantumGroup& g) {
  const int n = g.dim();
  std::ostringstream os;
  os << "NAME " << g.name() << "\n";
  os << "DIM " << n << "\n";
  os << "BASIS";
  for (const auto& l : g.labels()) os << " " << l;
  os << "\n";
  auto entry3 = [&](int a, int b, int c, cplx v) {
    os << a << " " << b << " " << c << " " << fmt(v.real()) << " " << fmt(v.imag())
       << "\n";
  };
  os << "MULT\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.mult(i, j, k) != cplx(0.0)) entry3(i, j, k, g.mult(i, j, k));
  os << "COPRODUCT\n";
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (g.coproduct(k, i, j) != cplx(0.0)) entry3(k, i, j, g.coproduct(k, i, j));
  os << "STAR\n";
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (g.star_matrix()(k, i) != cplx(0.0)) {
        const cplx v = g.star_matrix()(k, i);
        os << i << " " << k << " " << fmt(v.real()) << " " << fmt(v.imag()) << "\n";
      }
  os << "ANTIPODE\n";
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (g.antipode_matrix()(k, i) != cplx(0.0)) {
        const cplx v = g.antipode_matrix()(k, i);
        os << i << " " << k << " " << fmt(v.real()) << " " << fmt(v.imag()) << "\n";
      }
  os << "COUNIT\n";
  for (int i = 0; i < n; ++i)
    if (g.counit()(i) != cplx(0.0)) {
      const cplx v = g.counit()(i);
      os << i << " " << fmt(v.real()) << " " << fmt(v.imag()) << "\n";
    }
  os << "HAAR\n";
  for (int i = 0; i < n; ++i)
    if (g.haar()(i) != cplx(0.0)) {
      const cplx v = g.haar()(i);
      os << i << " " << fmt(v.real()) << " " << fmt(v.imag()) << "\n";
    }
  return os.str();
}

void save_definition(const FiniteQuantumGroup& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_definition(g);
}

std::vector<Vec> load_covectors(const std::string& path, int expected_dim) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::string line;
  int line_no = 0;
  int dim = -1;
  std::vector<Vec> rows;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "COVECTORS") {
      if (!(ls >> dim) || dim <= 0) throw ParseError("bad COVECTORS header", line_no);
      if (expected_dim > 0 && dim != expected_dim)
        throw ParseError("covector dimension does not match the quantum group", line_no);
      continue;
    }
    if (dim <= 0) throw ParseError("missing COVECTORS header", line_no);
    std::istringstream row(line);
    Vec v(dim);
    for (int i = 0; i < dim; ++i) {
      double re, im;
      if (!(row >> re >> im))
        throw ParseError("expected " + std::to_string(2 * dim) + " reals", line_no);
      v(i) = cplx(re, im);
    }
    std::string extra;
    if (row >> extra) throw ParseError("trailing tokens on covector line", line_no);
    rows.push_back(std::move(v));
  }
  if (dim <= 0) throw ParseError("missing COVECTORS header", 0);
  return rows;
}

void save_covectors(const std::vector<Vec>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  if (rows.empty()) throw std::invalid_argument("no covectors to save");
  out << "COVECTORS " << rows.front().size() << "\n";
  for (const Vec& v : rows) {
    for (int i = 0; i < v.size(); ++i) {
      if (i) out << " ";
      out << fmt(v(i).real()) << " " << fmt(v(i).imag());
    }
    out << "\n";
  }
}

}  // namespace qg
