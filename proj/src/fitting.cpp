#include "ellfm/fitting.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "ellfm/errors.hpp"

namespace ellfm {

SEquivalenceClass::SEquivalenceClass(std::vector<SEquivalencePart> parts) {
  if (parts.empty()) throw PreconditionViolation("S-equivalence class needs at least one part");
  std::map<std::string, SEquivalencePart> merged;
  for (auto& part : parts) {
    if (part.multiplicity < 1) {
      throw PreconditionViolation("multiplicity at " + part.point + " must be >= 1");
    }
    auto [it, inserted] = merged.try_emplace(part.point, part);
    if (!inserted) {
      if (it->second.singular != part.singular) {
        throw PreconditionViolation("point " + part.point + " flagged both singular and smooth");
      }
      it->second.multiplicity += part.multiplicity;
    }
  }
  for (auto& [point, part] : merged) parts_.push_back(std::move(part));
  if (std::count_if(parts_.begin(), parts_.end(), [](const auto& p) { return p.singular; }) > 1) {
    throw PreconditionViolation(
        "at most one rank-one factor can be non-locally-free: two singular points given");
  }
}

long SEquivalenceClass::rank() const noexcept {
  long n = 0;
  for (const auto& part : parts_) n += part.multiplicity;
  return n;
}

long SEquivalenceClass::singular_multiplicity() const noexcept {
  for (const auto& part : parts_) {
    if (part.singular) return part.multiplicity;
  }
  return 0;
}

long colength_of_power(long exponent, bool singular) {
  return singular ? 2 * exponent - 1 : exponent;
}

FittingCycle fitting_cycle(const SEquivalenceClass& cls) {
  FittingCycle out{{}, 0};
  for (const auto& part : cls.parts()) {
    out.cycle.push_back({part.point, part.multiplicity});
    out.length += colength_of_power(part.multiplicity, part.singular);
  }
  return out;
}

SymPoint sym_point(const SEquivalenceClass& cls) {
  SymPoint out{{}, 0};
  for (const auto& part : cls.parts()) {
    out.terms.push_back({part.point, part.multiplicity});
    out.degree += part.multiplicity;
  }
  return out;
}

std::string to_string(const SymPoint& point) {
  std::string out;
  for (const auto& term : point.terms) {
    if (!out.empty()) out += " + ";
    if (term.exponent != 1) out += std::to_string(term.exponent) + "*";
    out += term.point;
  }
  return out;
}

SEquivalencePart parse_part(const std::string& text) {
  const auto first = text.find(':');
  if (first == std::string::npos || first == 0) {
    throw ParseError("part must look like id:mult[:s], got '" + text + "'", first == 0 ? 1 : text.size() + 1);
  }
  const auto second = text.find(':', first + 1);
  const std::string mult = text.substr(first + 1, second == std::string::npos ? std::string::npos
                                                                              : second - first - 1);
  long value = 0;
  const auto [ptr, ec] = std::from_chars(mult.data(), mult.data() + mult.size(), value);
  if (ec != std::errc() || ptr != mult.data() + mult.size() || mult.empty()) {
    throw ParseError("multiplicity must be an integer in part '" + text + "'",
                     first + 2 + static_cast<std::size_t>(ptr - mult.data()));
  }
  bool singular = false;
  if (second != std::string::npos) {
    if (text.substr(second + 1) != "s") {
      throw ParseError("only the flag 's' (singular) may follow the multiplicity in '" + text + "'",
                       second + 2);
    }
    singular = true;
  }
  return {text.substr(0, first), value, singular};
}

}  // namespace ellfm
