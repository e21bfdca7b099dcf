// Generator registry for a tri-graded commutative polynomial algebra.
//
// Generators are declared once and identified by a dense integer id; the
// global generator order (used to define the canonical monomial form and the
// resulting Koszul signs) is declaration order.  Jet-style contexts declare
// generators on demand through this registry.

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gstar/degree.hpp"

namespace gstar {

enum class GenKind {
    Field,           // zero-jet field component
    Jet,             // higher jet of a field component
    BaseCoord,       // x^mu
    HorizontalForm,  // dx^mu
    VerticalForm,    // delta of a jet
    Antifield,       // zero-jet antifield component (jets of antifields use Jet)
    Parameter,       // central degree-(0,0,0) deformation parameter
    IndexedSymbol,   // coefficient symbol with abstract index labels (tensor calculus)
};

struct Generator {
    std::string name;
    Tridegree deg;
    GenKind kind = GenKind::Field;
    bool odd() const { return deg.parity() == 1; }
};

class Algebra {
  public:
    int declare(Generator gen) {
        auto it = index_.find(gen.name);
        if (it != index_.end()) throw std::runtime_error("generator already declared: " + gen.name);
        int id = (int)gens_.size();
        index_.emplace(gen.name, id);
        gens_.push_back(std::move(gen));
        return id;
    }

    // Returns the id of `name`, or -1 when undeclared.
    int find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }

    int require(const std::string& name) const {
        int id = find(name);
        if (id < 0) throw std::runtime_error("undeclared generator: " + name);
        return id;
    }

    const Generator& gen(int id) const { return gens_.at(id); }
    int size() const { return (int)gens_.size(); }

  private:
    std::vector<Generator> gens_;
    std::unordered_map<std::string, int> index_;
};

using AlgebraPtr = std::shared_ptr<Algebra>;

}  // namespace gstar
