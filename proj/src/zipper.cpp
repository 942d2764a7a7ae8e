#include "fermatmod/zipper.hpp"

#include <sstream>

#include "fermatmod/error.hpp"
#include "json.hpp"
#include "fermatmod/parallel.hpp"

namespace fermatmod {

namespace {

void RequireDigitLevel(const PrimeContext& ctx, unsigned j) {
  if (j < 1 || j + 1 > ctx.j_max()) {
    throw Error(ErrorKind::kLevelOutOfRange,
                "h_" + std::to_string(j) + " needs a context with j_max >= " +
                    std::to_string(j + 1));
  }
}

}  // namespace

LinearForm Linearize(const PrimeContext& ctx, u64 a, unsigned j, u64 s,
                     const DigitVector& prefix) {
  RequireDigitLevel(ctx, j);
  if (prefix.size() + 1 != j) {
    throw Error(ErrorKind::kInvalidArgument, "prefix must have j-1 digits");
  }
  const u64 p = ctx.p();
  std::vector<u64> h(p);
  for (u64 r = 0; r < p; ++r) h[r] = HEval(ctx, a, j, s, prefix.Append(r)).value;

  LinearForm form;
  form.a = a;
  form.j = j;
  form.s = s;
  form.prefix = prefix;
  form.slope = SubMod(h[1], h[0], p);
  if (form.slope == 0) {
    throw Error(ErrorKind::kZeroSlope, "h is constant in the last digit at s=" + std::to_string(s));
  }
  form.root = MulMod(SubMod(0, h[0], p), *InvMod(form.slope, p), p);
  for (u64 r = 0; r < p; ++r) {
    if (form(r, p) != h[r]) {
      throw Error(ErrorKind::kNonlinear, "h is not linear in the last digit at s=" +
                                             std::to_string(s) + ", r=" + std::to_string(r));
    }
  }
  return form;
}

u64 ZipperDigit(const PrimeContext& ctx, u64 a, unsigned j, u64 s, const DigitVector& prefix) {
  return Linearize(ctx, a, j, s, prefix).root;
}

S0Search ExtractS0(const PrimeContext& ctx, u64 a, unsigned j) {
  const u64 p = ctx.p();
  const u64 order = p - 1;
  const DigitVector zero = DigitVector::FromValue(p, 0, j - 1);
  S0Search out;
  out.slopes.resize(order);
  for (u64 s = 0; s < order; ++s) out.slopes[s] = Linearize(ctx, a, j, s, zero).slope;
  out.mismatches.assign(order, 0);
  for (u64 s0 = 0; s0 < order; ++s0) {
    for (u64 s = 0; s < order; ++s) {
      if (out.slopes[s] != ctx.Exp(1, s + a + s0).value) ++out.mismatches[s0];
    }
    if (out.mismatches[s0] == 0 && !out.s0) out.s0 = s0;
  }
  return out;
}

AShiftReport AShiftIdentityCheck(const PrimeContext& ctx, u64 a, unsigned j,
                                 std::span<const ShiftSample> samples) {
  const u64 p = ctx.p();
  AShiftReport report;
  report.a = a;
  report.j = j;
  for (const auto& sample : samples) {
    AShiftRow row;
    row.s = sample.s;
    row.prefix = sample.r;
    row.lhs = ZipperDigit(ctx, a, j, sample.s, sample.r);
    const u64 carry = (sample.s + a) / (p - 1);
    const ShiftSample moved = ShiftArguments(p, a, sample.s, sample.r, ShiftReading::kDigitwise);
    row.rhs = SubMod(ZipperDigit(ctx, 0, j, moved.s, moved.r), (a + carry) % p, p);
    if (row.lhs == row.rhs) ++report.agreements;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<ZElement> ZSet(const PrimeContext& ctx, u64 a, unsigned j) {
  const u64 p = ctx.p();
  std::vector<ZElement> out;
  out.reserve(p - 1);
  for (u64 s = 0; s + 1 < p; ++s) {
    DigitVector digits(p, {});
    for (unsigned k = 1; k <= j; ++k) digits = digits.Append(ZipperDigit(ctx, a, k, s, digits));
    out.push_back({s, std::move(digits)});
  }
  return out;
}

ZipperResult ZipperSolve(const PrimeContext& ctx, unsigned n, std::optional<u64> only_shift) {
  const u64 p = ctx.p();
  if (n < 2 || (p - 1) % (2 * static_cast<u64>(n)) != 0) {
    throw Error(ErrorKind::kDivisibility, "2n must divide p-1 (p=" + std::to_string(p) +
                                              ", n=" + std::to_string(n) + ")");
  }
  ZipperResult result;
  result.p = p;
  result.g = ctx.g();
  result.n = n;
  result.max_level = n - 1;
  RequireDigitLevel(ctx, result.max_level);

  std::vector<u64> shifts;
  if (only_shift) {
    if (*only_shift >= p - 1) throw Error(ErrorKind::kInvalidArgument, "shift outside Z_{p-1}");
    shifts.push_back(*only_shift);
  } else {
    shifts = RootsOfMinusOne(ctx, n).exponents;
  }

  for (u64 a : shifts) {
    std::vector<ZipperSolution> per_s(p - 1);
    ParallelFor(p - 1, [&](std::size_t idx) {
      ZipperSolution& sol = per_s[idx];
      sol.a = a;
      sol.s = idx;
      sol.digits = DigitVector(p, {});
      for (unsigned k = 1; k <= result.max_level; ++k) {
        const u64 base = ZipperDigit(ctx, 0, k, sol.s, sol.digits);
        const u64 shifted = ZipperDigit(ctx, a, k, sol.s, sol.digits);
        if (base != shifted) {
          sol.discrepancy = SubMod(base, shifted, p);
          return;
        }
        sol.digits = sol.digits.Append(base);
        sol.level = k;
      }
    });
    ZipperShiftResult shift_result{a, {}};
    for (auto& sol : per_s) {
      if (sol.level >= 1) shift_result.solutions.push_back(std::move(sol));
    }
    result.shifts.push_back(std::move(shift_result));
  }
  return result;
}

Point MockPoint(const PrimeContext& ctx, const ZipperSolution& solution) {
  const unsigned level = solution.level + 1;
  const u128 base = static_cast<u128>(solution.s) +
                    static_cast<u128>(ctx.p() - 1) * solution.digits.value();
  const u64 phi = ctx.totient(level);
  const u64 t = static_cast<u64>(base % phi);
  const u64 t_shift =
      static_cast<u64>((base + static_cast<u128>(solution.a) * ctx.modulus(level - 1)) % phi);
  return {ctx.Exp(level, t).value, ctx.Exp(level, t_shift).value};
}

std::string ZipperJson(const ZipperResult& result) {
  nlohmann::ordered_json doc;
  doc["p"] = result.p;
  doc["g"] = result.g;
  doc["n"] = result.n;
  doc["max_level"] = result.max_level;
  doc["shifts"] = nlohmann::ordered_json::array();
  for (const auto& shift : result.shifts) {
    nlohmann::ordered_json entry;
    entry["a"] = shift.a;
    entry["solutions"] = nlohmann::ordered_json::array();
    for (const auto& sol : shift.solutions) {
      nlohmann::ordered_json js;
      js["a"] = sol.a;
      js["s"] = sol.s;
      js["digits"] = sol.digits.digits();
      js["level"] = sol.level;
      js["discrepancy"] = sol.discrepancy ? nlohmann::ordered_json(*sol.discrepancy)
                                          : nlohmann::ordered_json(nullptr);
      js["partner_exponent"] = sol.partner_exponent(result.p);
      entry["solutions"].push_back(std::move(js));
    }
    doc["shifts"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::vector<u64> DiscreteDerivative(std::span<const u64> values, u64 p) {
  std::vector<u64> out;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    out.push_back(SubMod(values[i + 1], values[i], p));
  }
  return out;
}

std::vector<HProfile> HProfiles(const PrimeContext& ctx, u64 a) {
  const u64 p = ctx.p();
  RequireDigitLevel(ctx, 2);
  const DigitVector empty(p, {});
  std::vector<HProfile> profiles(4);
  const char* names[] = {"H1^0", "H1^a", "H2^0", "H2^a"};
  for (std::size_t i = 0; i < 4; ++i) {
    profiles[i].name = names[i];
    profiles[i].level = i < 2 ? 1 : 2;
    profiles[i].shifted = (i % 2) == 1;
    profiles[i].a = a;
    profiles[i].p = p;
    profiles[i].values.assign(p - 1, 0);
  }
  for (u64 s = 0; s + 1 < p; ++s) {
    const u64 t = ctx.Exp(1, s).value;
    const DigitVector base1 = empty.Append(ZipperDigit(ctx, 0, 1, s, empty));
    const DigitVector shift1 = empty.Append(ZipperDigit(ctx, a, 1, s, empty));
    const DigitVector base2 = base1.Append(ZipperDigit(ctx, 0, 2, s, base1));
    const DigitVector shift2 = shift1.Append(ZipperDigit(ctx, a, 2, s, shift1));
    // Each chain is fed into the other shift's digit function.
    profiles[0].values[t - 1] = HEval(ctx, 0, 1, s, shift1).value;
    profiles[1].values[t - 1] = HEval(ctx, a, 1, s, base1).value;
    profiles[2].values[t - 1] = HEval(ctx, 0, 2, s, shift2).value;
    profiles[3].values[t - 1] = HEval(ctx, a, 2, s, base2).value;
  }
  for (auto& prof : profiles) prof.derivative = DiscreteDerivative(prof.values, p);
  return profiles;
}

std::vector<u64> CommonZeros(std::span<const HProfile> profiles) {
  std::vector<u64> out;
  if (profiles.empty()) return out;
  for (u64 t = 1; t <= profiles.front().values.size(); ++t) {
    bool all_zero = true;
    for (const auto& prof : profiles) all_zero = all_zero && prof.at(t) == 0;
    if (all_zero) out.push_back(t);
  }
  return out;
}

std::string ProfileCsv(const HProfile& profile) {
  std::ostringstream os;
  os << "t,value\n";
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    os << i + 1 << ',' << profile.values[i] << '\n';
  }
  return os.str();
}

std::string DerivativeCsv(const HProfile& profile) {
  std::ostringstream os;
  os << "t,value\n";
  for (std::size_t i = 0; i < profile.derivative.size(); ++i) {
    os << i + 1 << ',' << profile.derivative[i] << '\n';
  }
  return os.str();
}

SemilinearitySummary SemilinearityReport(const HProfile& profile) {
  SemilinearitySummary out;
  u64 run = 0;
  for (std::size_t i = 0; i < profile.derivative.size(); ++i) {
    const u64 d = profile.derivative[i];
    ++out.histogram[d];
    run = (i > 0 && profile.derivative[i - 1] == d) ? run + 1 : 1;
    if (run > out.longest_run) {
      out.longest_run = run;
      out.run_value = d;
    }
  }
  out.distinct = out.histogram.size();
  return out;
}

std::string SemilinearityCsv(const SemilinearitySummary& summary) {
  std::ostringstream os;
  os << "value,count\n";
  for (const auto& [value, count] : summary.histogram) os << value << ',' << count << '\n';
  return os.str();
}

}  // namespace fermatmod
