#include "skc/benign.hpp"

#include <cmath>
#include <sstream>

namespace skc {

Rational std_uniform_density(const BitString& x) {
  if (x.length == 0) return Rational(0);
  const Integer n(x.length);
  return make_ratio(Integer(1), n * (n + 1) * pow2(static_cast<unsigned long>(x.length)));
}

Rational std_uniform_length_mass(int n) {
  if (n <= 0) return Rational(0);
  return make_ratio(Integer(1), Integer(n) * Integer(n + 1));
}

Rational std_uniform_cumulative_mass(int n) {
  if (n <= 0) return Rational(0);
  return make_ratio(Integer(n), Integer(n + 1));
}

Density std_uniform() {
  return [](const BitString& x) { return std_uniform_density(x); };
}

BenignScheme<std::uint64_t> adversarial_benign_scheme(TargetFn f, int top) {
  if (top < 1 || top > kMaxEnumerableLength)
    throw GuardError("adversarial_benign_scheme: top length out of range");
  return [f = std::move(f), top](const BitString& x, const Rational& delta)
             -> std::optional<std::uint64_t> {
    if (x.length == top && delta > 0) {
      const Rational budget = delta * std_uniform_cumulative_mass(top);
      const Rational per_string = std_uniform_density(BitString{top, 0});
      Integer k = floor_rational(budget / per_string);
      const Integer all = pow2(static_cast<unsigned long>(top));
      if (k > all) k = all;
      if (Integer(static_cast<unsigned long>(x.bits)) < k) return std::nullopt;
    }
    return f(x);
  };
}

Rational prob_of_event(const Density& density,
                       const std::function<bool(const BitString&)>& event,
                       int n, ProbMode mode, Exec exec) {
  if (n < 0 || n > kMaxEnumerableLength)
    throw GuardError("prob_of_event: length " + std::to_string(n) +
                     " exceeds the enumeration guard of " +
                     std::to_string(kMaxEnumerableLength));
  const int lo = mode == ProbMode::at ? n : 1;
  Rational hit(0);
  Rational total(0);
  for (int len = lo; len <= n; ++len) {
    const std::int64_t count = static_cast<std::int64_t>(strings_of_length(len));
    hit += sum_indices(exec, count, Rational(0), [&](std::int64_t v) {
      const BitString x{len, static_cast<std::uint64_t>(v)};
      return event(x) ? density(x) : Rational(0);
    });
    total += sum_indices(exec, count, Rational(0), [&](std::int64_t v) {
      return density(BitString{len, static_cast<std::uint64_t>(v)});
    });
  }
  if (total == 0)
    throw ZeroMassError(std::string("prob_of_event: conditioning on zero mass (mode=") +
                        (mode == ProbMode::at ? "at" : "upto") + ", n=" +
                        std::to_string(n) + ")");
  return hit / total;
}

PartialSum poly_on_average_partial_sum(const TargetFn& runtime,
                                       const Density& density,
                                       const Rational& epsilon, int maxlen,
                                       Exec exec) {
  if (epsilon <= 0)
    throw std::invalid_argument("poly_on_average_partial_sum: epsilon must be positive");
  if (maxlen < 1 || maxlen > kMaxPartialSumLength)
    throw GuardError("poly_on_average_partial_sum: maxlen " +
                     std::to_string(maxlen) + " exceeds the guard of " +
                     std::to_string(kMaxPartialSumLength));

  PartialSum result;
  if (epsilon.get_den() == 1) {
    const unsigned long e = static_cast<unsigned long>(epsilon.get_num().get_ui());
    Rational sum(0);
    for (int len = 1; len <= maxlen; ++len) {
      const std::int64_t count = static_cast<std::int64_t>(strings_of_length(len));
      sum += sum_indices(exec, count, Rational(0), [&](std::int64_t v) {
        const BitString x{len, static_cast<std::uint64_t>(v)};
        Integer powed;
        mpz_ui_pow_ui(powed.get_mpz_t(), static_cast<unsigned long>(runtime(x)), e);
        return density(x) * make_ratio(powed, Integer(len));
      });
    }
    result.exact = true;
    result.value = sum;
    result.approx = sum.get_d();
    return result;
  }

  // fractional exponent: 64-bit floating policy, summed in fixed order
  const double e = epsilon.get_d();
  double sum = 0;
  for (int len = 1; len <= maxlen; ++len) {
    const std::uint64_t count = strings_of_length(len);
    for (std::uint64_t v = 0; v < count; ++v) {
      const BitString x{len, v};
      sum += density(x).get_d() *
             std::pow(static_cast<double>(runtime(x)), e) / len;
    }
  }
  result.exact = false;
  result.value = Rational(0);
  result.approx = sum;
  return result;
}

FunctionTable FunctionTable::parse(std::string_view text) {
  FunctionTable table;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no;
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') {
      std::istringstream in(line);
      std::string bits;
      std::uint64_t value = 0;
      if (!(in >> bits >> value))
        throw ParseError("function table line " + std::to_string(line_no) +
                         ": expected 'bitstring value'");
      std::string rest;
      if (in >> rest)
        throw ParseError("function table line " + std::to_string(line_no) +
                         ": trailing content '" + rest + "'");
      table.set(bitstring_from_text(bits), value);
    }
    start = end + 1;
    if (end == text.size()) break;
  }
  return table;
}

std::string FunctionTable::serialize() const {
  std::ostringstream out;
  for (const auto& [key, value] : entries_)
    out << to_text(BitString{key.first, key.second}) << ' ' << value << '\n';
  return out.str();
}

void FunctionTable::set(const BitString& x, std::uint64_t value) {
  entries_[{x.length, x.bits}] = value;
}

std::optional<std::uint64_t> FunctionTable::lookup(const BitString& x) const {
  const auto it = entries_.find({x.length, x.bits});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool FunctionTable::covers_all_lengths_through(int maxlen) const {
  for (int len = 1; len <= maxlen; ++len)
    for (std::uint64_t v = 0; v < strings_of_length(len); ++v)
      if (!entries_.contains({len, v})) return false;
  return true;
}

TargetFn FunctionTable::as_function() const {
  return [entries = entries_](const BitString& x) {
    const auto it = entries.find({x.length, x.bits});
    if (it == entries.end())
      throw std::out_of_range("function table has no entry for " + to_text(x));
    return it->second;
  };
}

}  // namespace skc
