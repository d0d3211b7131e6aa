#pragma once

// Diagnostic reports. Every validation operation returns a Report rather than
// throwing; the CLI renders it as text or as JSON carrying the same data.

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hn3/scalar.hpp"
#include "hn3/tensor.hpp"

namespace hn3 {

struct Violation {
  std::string what;  // which identity
  Index indices;     // 0-based in memory, 1-based when rendered
  Scalar lhs;
  Scalar rhs;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Component {
  Index indices;
  Scalar value;

  friend bool operator==(const Component&, const Component&) = default;
};

inline std::vector<Component> components_of(const Tensor& t) {
  std::vector<Component> out;
  for (auto& [idx, value] : t.nonzero()) out.push_back({idx, value});
  return out;
}

class Report {
 public:
  Report() = default;
  explicit Report(std::string check) : check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }
  bool passed() const noexcept { return !failed_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  const std::map<std::string, std::vector<Component>>& tensors() const noexcept { return tensors_; }

  void add_violation(std::string what, Index indices, Scalar lhs, Scalar rhs) {
    violations_.push_back({std::move(what), std::move(indices), std::move(lhs), std::move(rhs)});
    failed_ = true;
  }

  /// Fails the check without a componentwise witness.
  void fail(std::string note) {
    notes_.push_back(std::move(note));
    failed_ = true;
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }

  void attach(const std::string& name, const Tensor& t) { tensors_[name] = components_of(t); }

  /// Records every component where lhs and rhs differ.
  void compare(const std::string& what, const Tensor& lhs, const Tensor& rhs) {
    if (lhs.dim() != rhs.dim() || lhs.upper() != rhs.upper() || lhs.lower() != rhs.lower()) {
      fail(what + ": shape mismatch");
      return;
    }
    for (std::size_t n = 0; n < lhs.size(); ++n)
      if (lhs.flat(n) != rhs.flat(n)) add_violation(what, lhs.index_of(n), lhs.flat(n), rhs.flat(n));
  }

  void compare(const std::string& what, const Matrix& lhs, const Matrix& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
      fail(what + ": shape mismatch");
      return;
    }
    for (std::size_t r = 0; r < lhs.rows(); ++r)
      for (std::size_t c = 0; c < lhs.cols(); ++c)
        if (lhs(r, c) != rhs(r, c)) add_violation(what, {r, c}, lhs(r, c), rhs(r, c));
  }

  void compare(const std::string& what, const Vector& lhs, const Vector& rhs) {
    if (lhs.size() != rhs.size()) {
      fail(what + ": length mismatch");
      return;
    }
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (lhs[i] != rhs[i]) add_violation(what, {i}, lhs[i], rhs[i]);
  }

  void compare(const std::string& what, Index at, const Scalar& lhs, const Scalar& rhs) {
    if (lhs != rhs) add_violation(what, std::move(at), lhs, rhs);
  }

  /// Appends everything from another report under this check.
  void merge(const Report& other) {
    for (const auto& v : other.violations_) violations_.push_back(v);
    for (const auto& n : other.notes_) notes_.push_back(n);
    for (const auto& [k, v] : other.tensors_) tensors_[k] = v;
    failed_ = failed_ || other.failed_;
  }

  friend bool operator==(const Report&, const Report&) = default;

  friend void to_json(nlohmann::json& j, const Report& r);
  friend void from_json(const nlohmann::json& j, Report& r);

 private:
  std::string check_;
  bool failed_ = false;
  std::vector<Violation> violations_;
  std::vector<std::string> notes_;
  std::map<std::string, std::vector<Component>> tensors_;
};

namespace detail {

inline nlohmann::json index_to_json(const Index& idx) {
  auto j = nlohmann::json::array();
  for (auto i : idx) j.push_back(i + 1);
  return j;
}

inline Index index_from_json(const nlohmann::json& j) {
  Index idx;
  for (const auto& v : j) {
    const auto i = v.get<long long>();
    if (i < 1) throw ParseError("", "indices are 1-based");
    idx.push_back(static_cast<std::size_t>(i - 1));
  }
  return idx;
}

}  // namespace detail

inline nlohmann::json components_to_json(const std::vector<Component>& cs) {
  auto arr = nlohmann::json::array();
  for (const auto& c : cs) arr.push_back({{"indices", detail::index_to_json(c.indices)}, {"value", to_string(c.value)}});
  return arr;
}

inline nlohmann::json tensor_to_json(const Tensor& t) { return components_to_json(components_of(t)); }

inline void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json::object();
  j["check"] = r.check_;
  j["status"] = r.passed() ? "pass" : "fail";
  auto vs = nlohmann::json::array();
  for (const auto& v : r.violations_)
    vs.push_back({{"what", v.what},
                  {"indices", detail::index_to_json(v.indices)},
                  {"lhs", to_string(v.lhs)},
                  {"rhs", to_string(v.rhs)}});
  j["violations"] = std::move(vs);
  auto ts = nlohmann::json::object();
  for (const auto& [name, cs] : r.tensors_) ts[name] = components_to_json(cs);
  j["tensors"] = std::move(ts);
  j["notes"] = r.notes_;
}

inline void from_json(const nlohmann::json& j, Report& r) {
  r = Report(j.at("check").get<std::string>());
  const auto status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") throw ParseError("/status", "expected \"pass\" or \"fail\"");
  r.failed_ = status == "fail";
  for (const auto& v : j.at("violations"))
    r.violations_.push_back({v.value("what", std::string{}), detail::index_from_json(v.at("indices")),
                             parse_scalar(v.at("lhs").get<std::string>()),
                             parse_scalar(v.at("rhs").get<std::string>())});
  for (const auto& [name, arr] : j.at("tensors").items()) {
    std::vector<Component> cs;
    for (const auto& c : arr)
      cs.push_back({detail::index_from_json(c.at("indices")), parse_scalar(c.at("value").get<std::string>())});
    r.tensors_[name] = std::move(cs);
  }
  if (j.contains("notes")) r.notes_ = j.at("notes").get<std::vector<std::string>>();
}

/// Human-readable rendering with the same content as the JSON form.
inline std::ostream& operator<<(std::ostream& os, const Report& r) {
  os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.check() << "\n";
  for (const auto& n : r.notes()) os << "  note: " << n << "\n";
  for (const auto& v : r.violations())
    os << "  violated " << v.what << " at " << format_index(v.indices) << ": lhs = " << to_string(v.lhs)
       << ", rhs = " << to_string(v.rhs) << "\n";
  for (const auto& [name, cs] : r.tensors()) {
    if (cs.empty()) os << "  " << name << " = 0\n";
    for (const auto& c : cs) os << "  " << name << format_index(c.indices) << " = " << to_string(c.value) << "\n";
  }
  return os;
}

inline std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace hn3
