#include "ngg/rational.hpp"

namespace ngg {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("malformed rational literal: " + s);
  Rat r;
  if (r.set_str(num + "/" + den, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace ngg
