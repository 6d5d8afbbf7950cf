#include "ctlab/corpus.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "ctlab/errors.hpp"

namespace ctlab {

namespace {

struct Atom {
  int degree = 0;
  std::vector<Permutation> gens;
  std::int64_t expected_order = 0; // 0 when no family formula applies
};

Permutation from_images(std::vector<int> images) {
  std::vector<std::uint8_t> img(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    img[i] = static_cast<std::uint8_t>(images[i]);
  return Permutation(std::move(img));
}

Permutation full_cycle(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    img[static_cast<std::size_t>(x)] = (x + 1) % n;
  return from_images(std::move(img));
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

Atom cyclic_atom(int n) {
  return Atom{n, {full_cycle(n)}, n};
}

Atom dihedral_atom(const std::string &text, int m) {
  if (m < 6 || m % 2 != 0)
    throw input_error("group spec '" + text + "': dihedral order must be even and at least 6");
  int n = m / 2;
  std::vector<int> flip(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    flip[static_cast<std::size_t>(x)] = (n - x) % n;
  return Atom{n, {full_cycle(n), from_images(std::move(flip))}, m};
}

// Dicyclic group of order 4u on its own elements a^i b^e (0 <= i < 2u,
// e in {0,1}), with b^2 = a^u and b a = a^-1 b. Point i + 2u*e is the element
// a^i b^e; generators act by right multiplication.
Atom dicyclic_atom(const std::string &text, int m) {
  if (m < 8 || m % 4 != 0)
    throw input_error("group spec '" + text + "': dicyclic order must be a multiple of 4, at least 8");
  int u = m / 4;
  int half = 2 * u;
  std::vector<int> mul_a(static_cast<std::size_t>(m));
  std::vector<int> mul_b(static_cast<std::size_t>(m));
  for (int i = 0; i < half; ++i) {
    mul_a[static_cast<std::size_t>(i)] = (i + 1) % half;
    mul_a[static_cast<std::size_t>(i + half)] = (i - 1 + half) % half + half;
    mul_b[static_cast<std::size_t>(i)] = i + half;
    mul_b[static_cast<std::size_t>(i + half)] = (i + u) % half;
  }
  return Atom{m, {from_images(std::move(mul_a)), from_images(std::move(mul_b))}, m};
}

Atom symmetric_atom(int n) {
  if (n == 1)
    return Atom{1, {Permutation::identity(1)}, 1};
  std::vector<int> swap01(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    swap01[static_cast<std::size_t>(x)] = x;
  swap01[0] = 1;
  swap01[1] = 0;
  return Atom{n, {from_images(std::move(swap01)), full_cycle(n)}, factorial(n)};
}

Atom alternating_atom(const std::string &text, int n) {
  if (n < 2)
    throw input_error("group spec '" + text + "': alternating degree must be at least 2");
  if (n == 2)
    return Atom{2, {Permutation::identity(2)}, 1};
  std::vector<int> three(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    three[static_cast<std::size_t>(x)] = x;
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  Atom atom{n, {from_images(std::move(three))}, factorial(n) / 2};
  if (n % 2 == 1) {
    atom.gens.push_back(full_cycle(n));
  } else {
    // (2 3 ... n): even permutation rotating all points but the first
    std::vector<int> rot(static_cast<std::size_t>(n));
    rot[0] = 0;
    for (int x = 1; x < n; ++x)
      rot[static_cast<std::size_t>(x)] = x % (n - 1) + 1;
    atom.gens.push_back(from_images(std::move(rot)));
  }
  return atom;
}

// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
Atom sl23_atom() {
  std::vector<std::pair<int, int>> vecs;
  int idx[3][3];
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == 0 && y == 0)
        continue;
      idx[x][y] = static_cast<int>(vecs.size());
      vecs.emplace_back(x, y);
    }
  std::vector<int> shear(8), quarter(8);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    auto [x, y] = vecs[i];
    shear[i] = idx[(x + y) % 3][y];      // (x, y) -> (x + y, y)
    quarter[i] = idx[(3 - y) % 3][x];    // (x, y) -> (-y, x)
  }
  return Atom{8, {from_images(std::move(shear)), from_images(std::move(quarter))}, 24};
}

// Frobenius group of order 20 as affine maps on F_5.
Atom f20_atom() {
  std::vector<int> shift(5), doubling(5);
  for (int x = 0; x < 5; ++x) {
    shift[static_cast<std::size_t>(x)] = (x + 1) % 5;
    doubling[static_cast<std::size_t>(x)] = (2 * x) % 5;
  }
  return Atom{5, {from_images(std::move(shift)), from_images(std::move(doubling))}, 20};
}

Atom explicit_atom(const std::string &text) {
  // perm:<degree>:[<perm>{;<perm>}]
  std::size_t p = 5; // past "perm:"
  std::size_t digits_end = p;
  while (digits_end < text.size() && std::isdigit(static_cast<unsigned char>(text[digits_end])))
    ++digits_end;
  if (digits_end == p)
    throw input_error("group spec '" + text + "': missing degree after 'perm:'");
  int degree = 0;
  try {
    degree = std::stoi(text.substr(p, digits_end - p));
  } catch (const std::exception &) {
    throw input_error("group spec '" + text + "': degree out of range");
  }
  if (degree < 1)
    throw input_error("group spec '" + text + "': degree must be positive");
  if (digits_end + 1 >= text.size() || text[digits_end] != ':' || text[digits_end + 1] != '[' ||
      text.back() != ']')
    throw input_error("group spec '" + text + "': expected ':[generators]' after the degree");
  std::string body = text.substr(digits_end + 2, text.size() - digits_end - 3);
  Atom atom;
  atom.degree = degree;
  if (!body.empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t semi = body.find(';', start);
      std::string piece = body.substr(start, semi == std::string::npos ? semi : semi - start);
      atom.gens.push_back(Permutation::from_cycles(piece, degree));
      if (semi == std::string::npos)
        break;
      start = semi + 1;
    }
  }
  return atom;
}

Atom parse_atom(const std::string &text) {
  if (text.rfind("perm:", 0) == 0)
    return explicit_atom(text);
  if (text == "SL23")
    return sl23_atom();
  if (text == "F20")
    return f20_atom();
  if (text.empty())
    throw input_error("group spec: empty factor");
  char family = text[0];
  std::string digits = text.substr(1);
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw input_error("group spec '" + text + "': unknown family name");
  int n = 0;
  try {
    n = std::stoi(digits);
  } catch (const std::exception &) {
    throw input_error("group spec '" + text + "': size out of range");
  }
  switch (family) {
  case 'C':
    if (n < 1)
      throw input_error("group spec '" + text + "': cyclic order must be positive");
    return cyclic_atom(n);
  case 'D':
    return dihedral_atom(text, n);
  case 'Q':
    return dicyclic_atom(text, n);
  case 'S':
    if (n < 1)
      throw input_error("group spec '" + text + "': symmetric degree must be positive");
    return symmetric_atom(n);
  case 'A':
    return alternating_atom(text, n);
  default:
    throw input_error("group spec '" + text + "': unknown family name");
  }
}

// Split on 'x' outside brackets, so explicit perm atoms survive intact.
std::vector<std::string> split_factors(const std::string &spec) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : spec) {
    if (c == '[')
      ++depth;
    else if (c == ']')
      --depth;
    if (c == 'x' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

Permutation shift_into(const Permutation &p, int offset, int total) {
  std::vector<int> img(static_cast<std::size_t>(total));
  for (int x = 0; x < total; ++x)
    img[static_cast<std::size_t>(x)] = x;
  for (int x = 0; x < p.degree(); ++x)
    img[static_cast<std::size_t>(offset + x)] = offset + p(static_cast<std::uint8_t>(x));
  return from_images(std::move(img));
}

std::string trimmed(const std::string &s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return s.substr(b, e - b);
}

} // namespace

GroupPtr parse_group_spec(const std::string &spec, Caps caps) {
  std::string text = trimmed(spec);
  if (text.empty())
    throw input_error("empty group spec");
  std::vector<std::string> factor_texts = split_factors(text);
  std::vector<GroupPtr> factors;
  std::vector<Atom> atoms;
  for (const std::string &ft : factor_texts) {
    Atom atom = parse_atom(ft);
    GroupPtr g = PermGroup::from_generators(atom.degree, atom.gens, caps);
    if (atom.expected_order != 0 && g->order() != atom.expected_order)
      throw internal_error("group spec '" + ft + "': construction has order " +
                           std::to_string(g->order()) + ", expected " +
                           std::to_string(atom.expected_order));
    factors.push_back(std::move(g));
    atoms.push_back(std::move(atom));
  }
  if (factors.size() == 1)
    return factors[0];

  int total_degree = 0;
  for (const Atom &a : atoms)
    total_degree += a.degree;
  std::vector<Permutation> gens;
  int offset = 0;
  for (const Atom &a : atoms) {
    for (const Permutation &p : a.gens)
      gens.push_back(shift_into(p, offset, total_degree));
    offset += a.degree;
  }
  GroupPtr product = PermGroup::from_generators(total_degree, std::move(gens), caps);
  std::int64_t expected = 1;
  for (const GroupPtr &g : factors)
    expected *= g->order();
  if (product->order() != expected)
    throw internal_error("group spec '" + text + "': direct product has order " +
                         std::to_string(product->order()) + ", expected " +
                         std::to_string(expected));
  return product;
}

std::vector<NamedGroup> parse_corpus_text(const std::string &text, Caps caps) {
  std::vector<NamedGroup> out;
  std::map<std::string, int> first_line;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos)
      line.resize(hash);
    std::string name = trimmed(line);
    if (name.empty())
      continue;
    auto [it, fresh] = first_line.emplace(name, lineno);
    if (!fresh)
      throw input_error("line " + std::to_string(lineno) + ": duplicate group '" + name +
                        "' (first at line " + std::to_string(it->second) + ")");
    try {
      out.push_back(NamedGroup{name, parse_group_spec(name, caps)});
    } catch (const input_error &e) {
      throw input_error("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const resource_error &e) {
      throw resource_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<NamedGroup> load_corpus(const std::string &path, Caps caps) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw input_error("cannot open corpus file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus_text(buffer.str(), caps);
}

const std::string &default_corpus_text() {
  static const std::string text = R"(# Default verification corpus: cyclic, dihedral, dicyclic, symmetric,
# alternating, and mixed direct products at desk scale.
C2
C3
C4
C5
C6
C7
C8
C9
C10
C11
C12
C2xC2
C2xC4
D6
D8
D10
D12
D14
D16
D18
D20
D22
D24
Q8
Q16
S3
S4
S5
S6
A4
A5
SL23
F20
C2xS3
C3xS3
C2xA4
C2xQ8
D26
D30
C3xD10
C5xS3
C7xS3
C3xF20
)";
  return text;
}

} // namespace ctlab

