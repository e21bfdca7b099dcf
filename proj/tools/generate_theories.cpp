// Regenerates the shipped theory-definition files from the built-in
// fixtures, guaranteeing that the files load structurally equal to them.
// Usage: generate_theories OUTPUT_DIR

#include <fstream>
#include <iostream>

#include "gstar/theory_loader.hpp"

using namespace gstar;

namespace {

void emit_fields(std::ostream& os, JetContext& ctx) {
    os << "fields {\n";
    for (auto& fi : ctx.fields())
        os << "  " << fi.name << " : ghost " << fi.ghost << "\n";
    os << "}\n";
}

void emit_derivation(std::ostream& os, JetContext& ctx, const std::string& name, int ghost,
                     const std::map<std::string, Poly>& chars) {
    os << "\nderivation " << name << " ghost " << ghost << " {\n";
    for (auto& fi : ctx.fields()) {
        auto it = chars.find(fi.name);
        if (it == chars.end() || it->second.zero()) continue;
        os << "  " << fi.name << " -> " << poly_to_dsl(ctx.alg(), it->second) << "\n";
    }
    os << "}\n";
}

void write_file(const std::string& dir, const std::string& name, const std::string& body) {
    std::ofstream out(dir + "/" + name);
    if (!out) throw std::runtime_error("cannot write " + dir + "/" + name);
    out << body;
    std::cout << "wrote " << dir << "/" << name << "\n";
}

std::string flat_file() {
    FlatSusyQM t;
    std::ostringstream os;
    os << "gstar-theory v1\n\n"
       << "# N=2 supersymmetric particle on a flat three-dimensional target.\n"
       << "theory susy-qm-flat\nbase 1 t\n\n";
    emit_fields(os, t.ctx);
    emit_derivation(os, t.ctx, "Q", 1, t.structure().Q().chars);
    emit_derivation(os, t.ctx, "Qbar", -1, t.Qbar().chars);
    os << "\nlagrangian L = " << poly_to_dsl(t.ctx.alg(), t.L()) << "\n";
    os << "\nsuites { relations }\n";
    return os.str();
}

std::string curved_file(bool morse) {
    std::ostringstream os;
    os << "gstar-theory v1\n\n"
       << "# N=2 supersymmetric particle on a curved target"
       << (morse ? " with a Morse potential" : "") << ".\n"
       << "# The target geometry enters through indexed symbol heads; the\n"
       << "# identity checks reduce tensor expressions with the named rewrite\n"
       << "# rule sets, so only the head table is declared here.\n"
       << "theory susy-qm-" << (morse ? "morse" : "curved") << "\nbase 1 t\n\n"
       << "fields {\n";
    const char* heads[][2] = {{"x", "0"},   {"xd", "0"},   {"xdd", "0"}, {"b", "0"},
                              {"bd", "0"},  {"psi", "1"},  {"psid", "1"}, {"chi", "-1"},
                              {"chid", "-1"}};
    for (auto& h : heads) os << "  " << h[0] << " : ghost " << h[1] << " indices 1\n";
    os << "}\n\nrules { definition lowering }\n\nsuites { relations }\n";
    return os.str();
}

std::string dw_file(const std::string& which) {
    std::unique_ptr<DW4d> t;
    std::unique_ptr<DW4dBV> tbv;
    JetContext* ctx;
    if (which == "bv") {
        tbv = std::make_unique<DW4dBV>();
        ctx = &tbv->ctx;
    } else {
        t = std::make_unique<DW4d>();
        ctx = &t->ctx;
    }
    std::ostringstream os;
    os << "gstar-theory v1\n\n"
       << "# Four-dimensional SU(2) cohomological gauge theory ("
       << (which == "canonical" ? "canonical shift-paired structure"
           : which == "deformed" ? "deformed structure with the displayed tables"
                                 : "antifield extension with the master differential")
       << ").\n"
       << "theory dw-4d-" << which << "\nbase 4 x\nalgebra su2\n\n";
    emit_fields(os, *ctx);
    if (which == "bv") {
        emit_derivation(os, *ctx, "Q", 1, tbv->Q_BV_displayed().chars);
        os << "\nlagrangian L_BV = " << poly_to_dsl(ctx->alg(), tbv->L_BV_displayed()) << "\n";
        os << "\nsuites { relations descent }\n";
    } else if (which == "canonical") {
        QKGStructure can = t->canonical();
        emit_derivation(os, *ctx, "Q", 1, can.Q().chars);
        for (int mu = 1; mu <= 4; ++mu)
            emit_derivation(os, *ctx, "K" + std::to_string(mu), -1, can.Kmu(mu).chars);
        os << "\nlagrangian L = " << poly_to_dsl(ctx->alg(), t->L_top()) << "\n";
        os << "\nsuites { relations descent }\n";
    } else {
        emit_derivation(os, *ctx, "Q", 1, t->Q_displayed().chars);
        auto K = t->K_displayed();
        for (int mu = 1; mu <= 4; ++mu)
            emit_derivation(os, *ctx, "K" + std::to_string(mu), -1, K[mu - 1].chars);
        os << "\nlagrangian L = " << poly_to_dsl(ctx->alg(), t->lagrangian_displayed())
           << "\n";
        os << "\nsuites { relations descent k-sequence }\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: generate_theories OUTPUT_DIR\n";
        return 2;
    }
    std::string dir = argv[1];
    try {
        write_file(dir, "susy-qm-flat.th", flat_file());
        write_file(dir, "susy-qm-curved.th", curved_file(false));
        write_file(dir, "susy-qm-morse.th", curved_file(true));
        write_file(dir, "dw-4d-canonical.th", dw_file("canonical"));
        write_file(dir, "dw-4d-deformed.th", dw_file("deformed"));
        write_file(dir, "dw-4d-bv.th", dw_file("bv"));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
