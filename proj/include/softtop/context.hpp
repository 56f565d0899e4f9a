#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace softtop {

// The pair (universe X, parameter set E). A cheap, shareable handle; copies
// refer to the same immutable data. Cell (p, x) of a soft set is bit
// p * |X| + x.
class SoftContext {
 public:
  // Throws SoftError(kInvalidContext) on an empty universe or parameter set
  // and on duplicate identifiers.
  SoftContext(std::vector<std::string> universe, std::vector<std::string> parameters);

  const std::vector<std::string>& universe() const noexcept { return data_->universe; }
  const std::vector<std::string>& parameters() const noexcept { return data_->parameters; }
  std::size_t universe_size() const noexcept { return data_->universe.size(); }
  std::size_t parameter_count() const noexcept { return data_->parameters.size(); }
  std::size_t cell_count() const noexcept { return universe_size() * parameter_count(); }

  std::size_t cell(std::size_t parameter, std::size_t element) const noexcept {
    return parameter * universe_size() + element;
  }

  std::optional<std::size_t> find_element(std::string_view id) const;
  std::optional<std::size_t> find_parameter(std::string_view id) const;
  // Throwing variants: kUnknownElement / kUnknownParameter.
  std::size_t element_index(std::string_view id) const;
  std::size_t parameter_index(std::string_view id) const;

  // Same universe and parameters, in the same order.
  friend bool operator==(const SoftContext& a, const SoftContext& b) noexcept;
  bool same_parameters(const SoftContext& other) const noexcept;

 private:
  struct Data {
    std::vector<std::string> universe;
    std::vector<std::string> parameters;
  };
  std::shared_ptr<const Data> data_;
};

// Throws SoftError(kContextMismatch) unless a == b.
void require_same_context(const SoftContext& a, const SoftContext& b);

}  // namespace softtop
