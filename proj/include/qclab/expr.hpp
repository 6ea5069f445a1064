#ifndef QCLAB_EXPR_HPP
#define QCLAB_EXPR_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qclab/curves.hpp"

namespace qclab {

// Arithmetic over complex values with sin, cos, tan, exp, log, sqrt, abs,
// re, im, conj, arg; constants i, pi, e; '+', '-', '*', '/', '^'.
class Expression {
  public:
    static Expression parse(const std::string& src, const std::vector<std::string>& variables);

    cpx eval(const std::map<std::string, cpx>& env) const;
    const std::string& source() const { return src_; }

    struct Node;

  private:
    std::shared_ptr<const Node> root_;
    std::string src_;
};

}  // namespace qclab

#endif
