#include "softtop/context.hpp"

#include <algorithm>
#include <unordered_set>

#include "softtop/error.hpp"

namespace softtop {
namespace {

void check_unique(const std::vector<std::string>& ids, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids) {
    if (id.empty()) throw SoftError(Errc::kInvalidContext, std::string("empty ") + what + " identifier");
    if (!seen.insert(id).second)
      throw SoftError(Errc::kInvalidContext, std::string("duplicate ") + what + " '" + id + "'");
  }
}

std::optional<std::size_t> index_of(const std::vector<std::string>& ids, std::string_view id) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidContext: return "InvalidContext";
    case Errc::kUnknownParameter: return "UnknownParameter";
    case Errc::kUnknownElement: return "UnknownElement";
    case Errc::kMissingParameter: return "MissingParameter";
    case Errc::kContextMismatch: return "ContextMismatch";
    case Errc::kInstanceTooLarge: return "InstanceTooLarge";
    case Errc::kUnknownTheorem: return "UnknownTheorem";
    case Errc::kNotBijective: return "NotBijective";
    case Errc::kSyntaxError: return "SyntaxError";
    case Errc::kUnknownName: return "UnknownName";
    case Errc::kAxiomViolation: return "AxiomViolation";
  }
  return "Unknown";
}

SoftError::SoftError(Errc code, const std::string& message, std::size_t line)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), line_(line) {}

SoftContext::SoftContext(std::vector<std::string> universe, std::vector<std::string> parameters) {
  if (universe.empty()) throw SoftError(Errc::kInvalidContext, "universe must be nonempty");
  if (parameters.empty()) throw SoftError(Errc::kInvalidContext, "parameter set must be nonempty");
  check_unique(universe, "element");
  check_unique(parameters, "parameter");
  data_ = std::make_shared<const Data>(Data{std::move(universe), std::move(parameters)});
}

std::optional<std::size_t> SoftContext::find_element(std::string_view id) const {
  return index_of(data_->universe, id);
}

std::optional<std::size_t> SoftContext::find_parameter(std::string_view id) const {
  return index_of(data_->parameters, id);
}

std::size_t SoftContext::element_index(std::string_view id) const {
  if (auto i = find_element(id)) return *i;
  throw SoftError(Errc::kUnknownElement, "'" + std::string(id) + "' is not in the universe");
}

std::size_t SoftContext::parameter_index(std::string_view id) const {
  if (auto i = find_parameter(id)) return *i;
  throw SoftError(Errc::kUnknownParameter, "'" + std::string(id) + "' is not a parameter");
}

bool operator==(const SoftContext& a, const SoftContext& b) noexcept {
  if (a.data_ == b.data_) return true;
  return a.data_->universe == b.data_->universe && a.data_->parameters == b.data_->parameters;
}

bool SoftContext::same_parameters(const SoftContext& other) const noexcept {
  return data_ == other.data_ || data_->parameters == other.data_->parameters;
}

void require_same_context(const SoftContext& a, const SoftContext& b) {
  if (!(a == b)) throw SoftError(Errc::kContextMismatch, "operands belong to different soft contexts");
}

}  // namespace softtop
