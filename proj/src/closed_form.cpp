#include "govlab/closed_form.hpp"

#include <algorithm>
#include <string>

#include "govlab/errors.hpp"

namespace govlab {
namespace {

constexpr std::size_t kMaxParam = std::size_t{1} << 20;

struct Term {
  int offset;  // power is param + offset
  int sign;
};

struct RowSpec {
  const char* label;
  const char* expression;
  std::size_t position;
  std::vector<Term> param_terms;
  long long constant;
};

// Rows written in the parameter; the constant collects the fixed low terms.
const std::vector<RowSpec>& rows_for(ClosedFormFamily f) {
  static const std::vector<RowSpec> t1_3z = {
      {"X", "2^m - 1", 0, {{0, 1}}, -1},
      {"O{1}", "2^(m+1) + 2^m - 2", 1, {{1, 1}, {0, 1}}, -2},
      {"E{1}", "2^m + 2^(m-1) - 1", 2, {{0, 1}, {-1, 1}}, -1},
      {"O{2}", "2^(m+2) + 2^(m-1) - 2", 3, {{2, 1}, {-1, 1}}, -2},
      {"E{2}", "2^(m+1) + 2^(m-2) - 1", 4, {{1, 1}, {-2, 1}}, -1},
      {"O{3}", "2^(m+2) + 2^(m+1) + 2^(m-1) + 2^(m-2) - 2", 5, {{2, 1}, {1, 1}, {-1, 1}, {-2, 1}}, -2},
      {"E{3}", "2^(m+1) + 2^m + 2^(m-2) + 2^(m-3) - 1", 6, {{1, 1}, {0, 1}, {-2, 1}, {-3, 1}}, -1},
  };
  static const std::vector<RowSpec> t1_5z = {
      {"X", "2^m - 1", 0, {{0, 1}}, -1},
      {"O{1}", "2^(m+2) + 2^m - 2^2", 1, {{2, 1}, {0, 1}}, -4},
      {"E^(1){1}", "2^(m+1) + 2^(m-1) - 2", 2, {{1, 1}, {-1, 1}}, -2},
      {"E^(2){1}", "2^m + 2^(m-2) - 1", 3, {{0, 1}, {-2, 1}}, -1},
      {"O{2}", "2^(m+2) + 2^(m+1) + 2^(m-2) - 2^2", 4, {{2, 1}, {1, 1}, {-2, 1}}, -4},
      {"E^(1){2}", "2^(m+1) + 2^m + 2^(m-3) - 2", 5, {{1, 1}, {0, 1}, {-3, 1}}, -2},
      {"E^(2){2}", "2^m + 2^(m-1) + 2^(m-4) - 1", 6, {{0, 1}, {-1, 1}, {-4, 1}}, -1},
  };
  static const std::vector<RowSpec> t2_3z = {
      {"X_m", "2^P + 2^1 - 1", 0, {{0, 1}}, 1},
      {"O{m}", "2^(P+1) + 2^P + 2^2", 1, {{1, 1}, {0, 1}}, 4},
      {"E^(1){m}", "2^P + 2^(P-1) + 2^1", 2, {{0, 1}, {-1, 1}}, 2},
      {"E^(2){m}", "2^(P-1) + 2^(P-2) + 2^1 - 1", 3, {{-1, 1}, {-2, 1}}, 1},
  };
  static const std::vector<RowSpec> t2_5z_odd = {
      {"X_(m+1)/2", "2^P + 2^1 - 1", 0, {{0, 1}}, 1},
      {"O{(m+1)/2}", "2^(P+2) + 2^P + 2^3 + 2^1 - 2^2", 1, {{2, 1}, {0, 1}}, 6},
      {"E{(m+1)/2}", "2^(P+1) + 2^(P-1) + 2^2 - 1", 2, {{1, 1}, {-1, 1}}, 3},
  };
  static const std::vector<RowSpec> t2_5z_even = {
      {"X_m/2", "2^P + 2^2 - 1", 0, {{0, 1}}, 3},
      {"O{m/2}", "2^(P+2) + 2^P + 2^4", 1, {{2, 1}, {0, 1}}, 16},
      {"E^(4){m/2}", "2^(P-2) + 2^(P-4) + 2^1 - 1", 5, {{-2, 1}, {-4, 1}}, 1},
  };
  switch (f) {
    case ClosedFormFamily::T1_3Z: return t1_3z;
    case ClosedFormFamily::T1_5Z: return t1_5z;
    case ClosedFormFamily::T2_3Z: return t2_3z;
    case ClosedFormFamily::T2_5Z_ODD: return t2_5z_odd;
    case ClosedFormFamily::T2_5Z_EVEN: return t2_5z_even;
  }
  throw ValidationError("unknown closed-form family");
}

Natural evaluate(const RowSpec& row, std::size_t param) {
  mpz_class acc = static_cast<long>(row.constant);
  for (const Term& t : row.param_terms) {
    mpz_class p;
    mpz_setbit(p.get_mpz_t(), static_cast<std::size_t>(static_cast<long long>(param) + t.offset));
    if (t.sign > 0) acc += p; else acc -= p;
  }
  return Natural(std::move(acc));
}

void check_param(ClosedFormFamily f, std::size_t param) {
  if (param < family_min_param(f) || param > kMaxParam) {
    throw RangeError(std::string(family_name(f)) + " parameter " + std::to_string(param) + " outside [" +
                     std::to_string(family_min_param(f)) + ", " + std::to_string(kMaxParam) + "]");
  }
}

}  // namespace

std::string_view family_name(ClosedFormFamily f) {
  switch (f) {
    case ClosedFormFamily::T1_3Z: return "T1_3Z";
    case ClosedFormFamily::T1_5Z: return "T1_5Z";
    case ClosedFormFamily::T2_3Z: return "T2_3Z";
    case ClosedFormFamily::T2_5Z_ODD: return "T2_5Z_ODD";
    case ClosedFormFamily::T2_5Z_EVEN: return "T2_5Z_EVEN";
  }
  return "?";
}

ClosedFormFamily parse_family(std::string_view name) {
  for (auto f : all_families()) {
    if (family_name(f) == name) return f;
  }
  throw ValidationError("unknown closed-form family '" + std::string(name) + "'");
}

std::uint64_t family_multiplier(ClosedFormFamily f) {
  return (f == ClosedFormFamily::T1_3Z || f == ClosedFormFamily::T2_3Z) ? 3 : 5;
}

std::size_t family_min_param(ClosedFormFamily f) {
  switch (f) {
    case ClosedFormFamily::T1_3Z: return 4;
    case ClosedFormFamily::T1_5Z: return 5;
    case ClosedFormFamily::T2_3Z: return 3;
    case ClosedFormFamily::T2_5Z_ODD: return 3;
    case ClosedFormFamily::T2_5Z_EVEN: return 5;  // P = 4 leaves E^(4) even
  }
  return 0;
}

const std::vector<ClosedFormFamily>& all_families() {
  static const std::vector<ClosedFormFamily> all = {ClosedFormFamily::T1_3Z, ClosedFormFamily::T1_5Z,
                                                    ClosedFormFamily::T2_3Z, ClosedFormFamily::T2_5Z_ODD,
                                                    ClosedFormFamily::T2_5Z_EVEN};
  return all;
}

std::vector<ClosedFormRow> eval_closed_form(ClosedFormFamily family, std::size_t param) {
  check_param(family, param);
  std::vector<ClosedFormRow> out;
  for (const auto& spec : rows_for(family)) {
    out.push_back({spec.label, spec.expression, spec.position, evaluate(spec, param)});
  }
  return out;
}

std::vector<ClosedFormMismatch> check_closed_form(ClosedFormFamily family, std::size_t lo, std::size_t hi,
                                                  const Rule& rule) {
  if (rule.multiplier() != family_multiplier(family)) {
    throw ValidationError(std::string(family_name(family)) + " belongs to the " +
                          std::to_string(family_multiplier(family)) + "Z+1 rule");
  }
  if (lo > hi) throw RangeError("empty parameter range");
  check_param(family, lo);
  check_param(family, hi);

  std::vector<ClosedFormMismatch> out;
  for (std::size_t p = lo; p <= hi; ++p) {
    const auto rows = eval_closed_form(family, p);
    std::size_t depth = 0;
    for (const auto& r : rows) depth = std::max(depth, r.position);

    // plain iteration, independent of the orbit bookkeeping
    std::vector<Natural> prefix{rows.front().value};
    for (std::size_t s = 0; s < depth; ++s) {
      const Natural& cur = prefix.back();
      prefix.push_back(cur.is_odd() ? cur.mul_add_one(rule.multiplier()) : cur >> 1);
    }
    for (const auto& r : rows) {
      if (!(prefix[r.position] == r.value)) out.push_back({p, r.label, r.value, prefix[r.position]});
    }
  }
  return out;
}

}  // namespace govlab
