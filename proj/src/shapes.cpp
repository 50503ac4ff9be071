#include "stanleychar/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace stanleychar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("partition parts must be non-negative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  while (!text.empty() && (text.front() == '(' || text.front() == ' ')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ')' || text.back() == ' ')) text.remove_suffix(1);
  return Partition(parse_int_list(text));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

bool MultirectangularShape::well_formed() const {
  if (p.size() != q.size()) return false;
  auto negative = [](int x) { return x < 0; };
  return std::none_of(p.begin(), p.end(), negative) && std::none_of(q.begin(), q.end(), negative);
}

bool MultirectangularShape::is_diagram() const {
  return well_formed() && std::is_sorted(q.begin(), q.end(), std::greater<>());
}

std::string MultirectangularShape::to_string() const {
  auto list = [](const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(v[i]);
    }
    return out + ")";
  };
  return "p=" + list(p) + " q=" + list(q);
}

Partition to_diagram(const MultirectangularShape& shape) {
  if (!shape.is_diagram())
    throw std::invalid_argument("invalid Stanley coordinates: " + shape.to_string());
  std::vector<int> rows;
  for (std::size_t i = 0; i < shape.p.size(); ++i) {
    if (shape.q[i] == 0) continue;
    rows.insert(rows.end(), static_cast<std::size_t>(shape.p[i]), shape.q[i]);
  }
  return Partition(std::move(rows));
}

MultirectangularShape to_multirect(const Partition& lambda) {
  MultirectangularShape shape;
  for (int row : lambda.parts()) {
    if (!shape.q.empty() && shape.q.back() == row) {
      ++shape.p.back();
    } else {
      shape.q.push_back(row);
      shape.p.push_back(1);
    }
  }
  return shape;
}

Partition dilate(const Partition& lambda, int s) {
  if (s < 1) throw std::invalid_argument("dilation factor must be positive");
  std::vector<int> rows;
  rows.reserve(lambda.parts().size() * static_cast<std::size_t>(s));
  for (int row : lambda.parts()) rows.insert(rows.end(), static_cast<std::size_t>(s), row * s);
  return Partition(std::move(rows));
}

Partition transpose(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> columns(static_cast<std::size_t>(lambda[0]), 0);
  for (int row : lambda.parts())
    for (int c = 0; c < row; ++c) ++columns[static_cast<std::size_t>(c)];
  return Partition(std::move(columns));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m) {
    auto level = partitions_of(m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  if (text.empty()) return values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0)
      throw std::invalid_argument("expected a comma-separated list of non-negative integers, got '" +
                                  std::string(text) + "'");
    values.push_back(value);
    start = end + 1;
  }
  return values;
}

}  // namespace stanleychar
