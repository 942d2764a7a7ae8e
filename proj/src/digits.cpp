#include "fermatmod/digits.hpp"

#include "fermatmod/error.hpp"

namespace fermatmod {

DigitVector::DigitVector(u64 p, std::vector<u64> digits) : p_(p), digits_(std::move(digits)) {
  for (u64 d : digits_) {
    if (d >= p_) throw Error(ErrorKind::kInvalidArgument, "digit out of range");
  }
}

DigitVector DigitVector::FromValue(u64 p, u64 value, std::size_t length) {
  std::vector<u64> digits(length);
  for (auto& d : digits) {
    d = value % p;
    value /= p;
  }
  if (value != 0) throw Error(ErrorKind::kInvalidArgument, "value needs more digits");
  return DigitVector(p, std::move(digits));
}

u64 DigitVector::value() const {
  u64 v = 0;
  for (std::size_t i = digits_.size(); i-- > 0;) v = v * p_ + digits_[i];
  return v;
}

DigitVector DigitVector::Append(u64 digit) const {
  auto d = digits_;
  d.push_back(digit);
  return DigitVector(p_, std::move(d));
}

Residue DigitG(const PrimeContext& ctx, unsigned j, u64 t) {
  const u64 upper = ctx.Exp(j + 1, t).value;
  const u64 lower = ctx.Exp(j, t % ctx.totient(j)).value;
  const u64 pj = ctx.modulus(j);
  if (upper < lower || (upper - lower) % pj != 0) {
    throw Error(ErrorKind::kInexactDivision, "Exp levels disagree mod p^j");
  }
  return {(upper - lower) / pj, ctx.p()};
}

u64 SeriesDigits::Reconstruct(u64 p, std::size_t levels) const {
  u64 total = 0;
  u64 scale = 1;
  for (std::size_t i = 0; i < levels && i < coefficients.size(); ++i) {
    total += coefficients[i] * scale;
    scale *= p;
  }
  return total;
}

SeriesDigits ExpSeries(const PrimeContext& ctx, u64 s, unsigned levels) {
  SeriesDigits out;
  out.s = s;
  if (levels == 0) return out;
  out.coefficients.push_back(ctx.Exp(1, s).value);
  for (unsigned i = 1; i < levels; ++i) {
    out.coefficients.push_back(DigitG(ctx, i, s % ctx.totient(i + 1)).value);
  }
  return out;
}

u64 CombinedExponent(const PrimeContext& ctx, u64 a, unsigned j, u64 s, u64 r_value) {
  const u128 phi = ctx.totient(j + 1);
  const u128 t = static_cast<u128>(s) + static_cast<u128>(ctx.p() - 1) * r_value +
                 static_cast<u128>(a) * ctx.modulus(j);
  return static_cast<u64>(t % phi);
}

Residue HEval(const PrimeContext& ctx, u64 a, unsigned j, u64 s, const DigitVector& r) {
  if (j < 1 || r.size() != j) {
    throw Error(ErrorKind::kInvalidArgument, "h_j needs exactly j digits");
  }
  return DigitG(ctx, j, CombinedExponent(ctx, a, j, s, r.value()));
}

const char* ShiftReadingName(ShiftReading reading) {
  switch (reading) {
    case ShiftReading::kDigitwise: return "digitwise";
    case ShiftReading::kWithCarries: return "carries";
    case ShiftReading::kExact: return "exact";
  }
  return "unknown";
}

std::vector<ShiftSample> FullShiftDomain(u64 p, unsigned j) {
  const u64 count = *CheckedPow(p, j);
  std::vector<ShiftSample> out;
  out.reserve((p - 1) * count);
  for (u64 s = 0; s + 1 < p; ++s) {
    for (u64 r = 0; r < count; ++r) out.push_back({s, DigitVector::FromValue(p, r, j)});
  }
  return out;
}

ShiftSample ShiftArguments(u64 p, u64 a, u64 s, const DigitVector& r, ShiftReading reading) {
  const u64 total = s + a;
  const u64 shifted_s = total % (p - 1);
  const u64 carry = total / (p - 1);
  const std::size_t j = r.size();
  const u64 pj = *CheckedPow(p, static_cast<unsigned>(j));
  u64 repunit = 0;  // 1 + p + ... + p^(j-1) mod p^j
  for (std::size_t i = 0, scale = 1; i < j; ++i, scale *= p) repunit += scale;
  switch (reading) {
    case ShiftReading::kDigitwise: {
      std::vector<u64> digits = r.digits();
      for (auto& d : digits) d = (d + a + carry) % p;
      return {shifted_s, DigitVector(p, std::move(digits))};
    }
    case ShiftReading::kWithCarries: {
      const u64 v = static_cast<u64>(
          (static_cast<u128>(r.value()) + static_cast<u128>(a + carry) * repunit) % pj);
      return {shifted_s, DigitVector::FromValue(p, v, j)};
    }
    case ShiftReading::kExact: {
      const u64 v = static_cast<u64>(
          (static_cast<u128>(r.value()) + carry + static_cast<u128>(a) * repunit) % pj);
      return {shifted_s, DigitVector::FromValue(p, v, j)};
    }
  }
  return {shifted_s, r};
}

ShiftReport ShiftIdentityReport(const PrimeContext& ctx, u64 a, unsigned j,
                             std::span<const ShiftSample> samples, ShiftReading reading) {
  ShiftReport report;
  report.a = a;
  report.j = j;
  report.reading = reading;
  for (const auto& sample : samples) {
    const u64 lhs = HEval(ctx, a, j, sample.s, sample.r).value;
    const ShiftSample moved = ShiftArguments(ctx.p(), a, sample.s, sample.r, reading);
    const u64 rhs = HEval(ctx, 0, j, moved.s, moved.r).value;
    ++report.evaluated;
    if (lhs == rhs) {
      ++report.agreements;
    } else if (!report.first_counterexample) {
      report.first_counterexample = ShiftMismatch{sample, lhs, rhs};
    }
  }
  return report;
}

}  // namespace fermatmod
