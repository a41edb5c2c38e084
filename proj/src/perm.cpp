#include "qtype/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qtype/errors.hpp"

namespace qtype::perm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n == 0) throw std::invalid_argument("Permutation: empty image list");
  std::vector<bool> seen(n, false);
  for (int image : images_) {
    if (image < 0 || image >= n || seen[image])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[image] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("Permutation::identity: n must be >= 1");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

namespace {

std::vector<std::vector<int>> parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("permutation parse: expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size())
        throw std::invalid_argument("permutation parse: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("permutation parse: expected a point number");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      cycle.push_back(value);
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  return cycles;
}

Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int n) {
  int max_point = 0;
  for (const auto& cycle : cycles)
    for (int point : cycle) max_point = std::max(max_point, point);
  if (n == -1) n = max_point;
  if (n < 1)
    throw std::invalid_argument(
        "permutation parse: cannot infer the number of points, pass n");
  if (max_point > n)
    throw std::invalid_argument("permutation parse: point exceeds n");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const int from = cycle[j] - 1;
      const int to = cycle[(j + 1) % cycle.size()] - 1;
      if (from < 0) throw std::invalid_argument("permutation parse: points are 1-based");
      if (used[from])
        throw std::invalid_argument("permutation parse: point repeated across cycles");
      used[from] = true;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation from_one_line(const std::string& text, int n) {
  std::istringstream in(text);
  std::vector<int> images;
  int value = 0;
  while (in >> value) images.push_back(value - 1);
  if (!in.eof())
    throw std::invalid_argument("permutation parse: bad one-line notation");
  if (n != -1 && static_cast<int>(images.size()) != n)
    throw std::invalid_argument("permutation parse: one-line notation has wrong length");
  return Permutation(std::move(images));
}

}  // namespace

Permutation Permutation::parse(const std::string& text, int n) {
  const auto paren = text.find('(');
  if (paren == std::string::npos) return from_one_line(text, n);
  return from_cycles(parse_cycles(text), n);
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size())
    throw std::invalid_argument("Permutation::compose: size mismatch");
  std::vector<int> images(images_.size());
  for (int i = 0; i < size(); ++i) images[i] = images_[other.images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int i = 0; i < size(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> visited(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (visited[start]) continue;
    ++count;
    for (int point = start; !visited[point]; point = images_[point]) visited[point] = true;
  }
  return count;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> visited(images_.size(), false);
  bool any = false;
  for (int start = 0; start < size(); ++start) {
    if (visited[start] || images_[start] == start) {
      visited[start] = true;
      continue;
    }
    any = true;
    os << '(';
    bool first = true;
    for (int point = start; !visited[point]; point = images_[point]) {
      visited[point] = true;
      if (!first) os << ' ';
      os << point + 1;
      first = false;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::find(elements.begin(), elements.end(), p) != elements.end();
}

PermutationGroup close_group(std::vector<Permutation> generators,
                             std::size_t max_order) {
  if (generators.empty())
    throw std::invalid_argument("close_group: need at least one generator");
  const int n = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != n)
      throw std::invalid_argument("close_group: generators act on different point counts");

  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  PermutationGroup group;
  group.n = n;
  group.generators = generators;

  std::set<std::vector<int>> seen;
  const auto push = [&](const Permutation& p) {
    if (seen.insert(p.images()).second) {
      group.elements.push_back(p);
      if (group.elements.size() > max_order) {
        std::ostringstream msg;
        msg << "close_group: closure exceeds max_order = " << max_order;
        throw CapExceededError(msg.str());
      }
      return true;
    }
    return false;
  };

  push(Permutation::identity(n));
  for (const auto& g : generators) push(g);
  for (std::size_t head = 0; head < group.elements.size(); ++head) {
    const Permutation current = group.elements[head];
    for (const auto& g : generators) push(current.compose(g));
  }

  // sanity: closed under generator products and inverses, order | n!
  for (const auto& element : group.elements) {
    if (seen.find(element.inverse().images()) == seen.end())
      throw InternalError("close_group: closure not closed under inverses");
  }
  if (factorial(n) % BigInt(group.elements.size()) != 0)
    throw InternalError("close_group: order does not divide n! (Lagrange)");
  return group;
}

PermutationGroup trivial_group(int n) {
  return close_group({Permutation::identity(n)});
}

PermutationGroup cyclic_group(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return close_group({Permutation(std::move(images))},
                     std::max<std::size_t>(static_cast<std::size_t>(n), 1));
}

PermutationGroup symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_group: n must be >= 1");
  if (n == 1) return trivial_group(1);
  std::vector<int> swap_images(n);
  std::iota(swap_images.begin(), swap_images.end(), 0);
  std::swap(swap_images[0], swap_images[1]);
  std::vector<int> cycle_images(n);
  for (int i = 0; i < n; ++i) cycle_images[i] = (i + 1) % n;
  const std::size_t order = factorial(n).convert_to<std::size_t>();
  return close_group({Permutation(std::move(swap_images)),
                      Permutation(std::move(cycle_images))},
                     order);
}

TensorBasisIndex TensorBasisIndex::from_linear(std::int64_t index, int n, int d) {
  if (index < 0) throw std::invalid_argument("TensorBasisIndex: negative index");
  std::vector<int> digits(n);
  for (int slot = n - 1; slot >= 0; --slot) {
    digits[slot] = static_cast<int>(index % d);
    index /= d;
  }
  if (index != 0)
    throw std::invalid_argument("TensorBasisIndex: index out of range for d^n");
  return TensorBasisIndex{std::move(digits)};
}

std::int64_t TensorBasisIndex::to_linear(int d) const {
  std::int64_t value = 0;
  for (int digit : digits) {
    if (digit < 0 || digit >= d)
      throw std::invalid_argument("TensorBasisIndex: digit out of range");
    value = value * d + digit;
  }
  return value;
}

TensorBasisIndex act_on_index(const Permutation& pi, const TensorBasisIndex& index) {
  if (pi.size() != static_cast<int>(index.digits.size()))
    throw std::invalid_argument("act_on_index: size mismatch");
  std::vector<int> digits(index.digits.size());
  for (int i = 0; i < pi.size(); ++i) digits[pi(i)] = index.digits[i];
  return TensorBasisIndex{std::move(digits)};
}

int cycle_count(const Permutation& pi) { return pi.cycle_count(); }

BigInt permutation_character(const Permutation& pi, int d) {
  if (d < 1) throw std::invalid_argument("permutation_character: d must be >= 1");
  return int_pow(d, pi.cycle_count());
}

}  // namespace qtype::perm
