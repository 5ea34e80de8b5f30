#include "prelie/io.hpp"

namespace prelie {

namespace {

json descriptor_to_json(const FieldDescriptor& d) {
    switch (d.kind) {
    case FieldKind::rational:
        return {{"kind", "rational"}};
    case FieldKind::prime:
        return {{"kind", "prime"}, {"p", d.p}};
    case FieldKind::quadratic: {
        Field base = make_field(d.base());
        return {{"kind", "quadratic"},
                {"base", descriptor_to_json(d.base())},
                {"d", base.from_rational(d.d).to_string()}};
    }
    }
    throw Error("unknown field kind");
}

FieldDescriptor descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw Error("field JSON needs a string \"kind\"");
    }
    const std::string kind = j["kind"];
    if (kind == "rational") {
        return FieldDescriptor::rational();
    }
    if (kind == "prime") {
        if (!j.contains("p") || !j["p"].is_number_integer()) {
            throw Error("prime field JSON needs an integer \"p\"");
        }
        return FieldDescriptor::prime(j["p"].get<std::int64_t>());
    }
    if (kind == "quadratic") {
        if (!j.contains("base") || !j.contains("d")) {
            throw Error("quadratic field JSON needs \"base\" and \"d\"");
        }
        FieldDescriptor base = descriptor_from_json(j["base"]);
        if (base.kind == FieldKind::quadratic) {
            throw Error("towers of quadratic extensions are not supported");
        }
        Field bf = make_field(base);
        Scalar d = scalar_from_json(bf, j["d"]);
        return FieldDescriptor::quadratic(base, d.a());
    }
    throw Error("unknown field kind \"" + kind + "\"");
}

void require_array(const json& j, const char* what) {
    if (!j.is_array()) {
        throw Error(std::string(what) + " must be a JSON array");
    }
}

std::size_t index_from_json(const json& j, std::size_t dim) {
    if (!j.is_number_integer()) {
        throw Error("basis index must be an integer");
    }
    const auto v = j.get<std::int64_t>();
    if (v < 1 || static_cast<std::size_t>(v) > dim) {
        throw Error("basis index " + std::to_string(v) + " outside 1.." + std::to_string(dim));
    }
    return static_cast<std::size_t>(v - 1);
}

} // namespace

json field_to_json(Field f) { return descriptor_to_json(f.descriptor()); }

Field field_from_json(const json& j) {
    if (j.is_string()) {
        return parse_field_name(j.get<std::string>());
    }
    return make_field(descriptor_from_json(j));
}

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(Field f, const json& j) {
    if (j.is_string()) {
        return f.parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return f.from_integer(j.get<std::int64_t>());
    }
    throw Error("scalar must be a literal string or an integer");
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (const auto& s : v.entries()) {
        out.push_back(scalar_to_json(s));
    }
    return out;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out.push_back(vector_to_json(m.row(r)));
    }
    return out;
}

Matrix matrix_from_json(Field f, const json& j) {
    require_array(j, "matrix");
    if (j.empty()) {
        throw Error("matrix has no rows");
    }
    const std::size_t cols = j[0].size();
    Matrix m(f, j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
        require_array(j[r], "matrix row");
        if (j[r].size() != cols) {
            throw Error("matrix row " + std::to_string(r + 1) + " has " + std::to_string(j[r].size()) +
                        " entries, expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = scalar_from_json(f, j[r][c]);
        }
    }
    return m;
}

json subspace_to_json(const Subspace& w) {
    return {{"ambient_dim", w.ambient_dim()}, {"basis", matrix_to_json(w.basis())}};
}

Subspace subspace_from_json(Field f, const json& j) {
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("basis")) {
        throw Error("subspace JSON needs \"ambient_dim\" and \"basis\"");
    }
    const auto n = j["ambient_dim"].get<std::size_t>();
    std::vector<Vector> rows;
    for (const auto& row : j["basis"]) {
        require_array(row, "basis row");
        if (row.size() != n) {
            throw Error("basis row length differs from ambient_dim");
        }
        Vector v(f, n);
        for (std::size_t c = 0; c < n; ++c) {
            v[c] = scalar_from_json(f, row[c]);
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span(f, n, rows);
}

json algebra_to_json(const Algebra& a) {
    json table = json::array();
    for (const auto& sc : a.table()) {
        table.push_back({sc.i + 1, sc.j + 1, sc.k + 1, scalar_to_json(sc.c)});
    }
    return {{"field", field_to_json(a.field())}, {"dim", a.dim()}, {"table", table}};
}

Algebra algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("dim") || !j.contains("table")) {
        throw Error("algebra JSON needs \"field\", \"dim\" and \"table\"");
    }
    Field f = field_from_json(j["field"]);
    if (!j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1) {
        throw Error("algebra dim must be a positive integer");
    }
    const auto dim = j["dim"].get<std::size_t>();
    require_array(j["table"], "table");
    std::vector<StructureConstant> table;
    for (const auto& row : j["table"]) {
        require_array(row, "table entry");
        if (row.size() != 4) {
            throw Error("table entry must be [i, j, k, coeff]");
        }
        table.push_back({index_from_json(row[0], dim), index_from_json(row[1], dim), index_from_json(row[2], dim),
                         scalar_from_json(f, row[3])});
    }
    return Algebra(f, dim, std::move(table));
}

json report_to_json(const Report& r) {
    json out{{"holds", r.holds}};
    if (!r.witness.empty()) {
        out["witness"] = r.witness;
    }
    if (!r.message.empty()) {
        out["message"] = r.message;
    }
    return out;
}

json rb_summary(const Algebra& a, const RBOperator& r) {
    const Report rb = is_rb(a, r);
    json out{{"operator", matrix_to_json(r.matrix)},
             {"weight", scalar_to_json(r.weight)},
             {"is_rb", rb.holds},
             {"witness", rb.holds ? json() : json(rb.witness)},
             {"splitting", is_splitting(r)},
             {"case", nullptr},
             {"certificate", nullptr},
             {"theorem2", nullptr}};
    if (!rb.holds || !burde_dimension(a)) {
        return out;
    }
    const CaseCertificate cert = classify_case(a, r);
    out["case"] = to_string(cert.kind);
    json c{{"holds", cert.check.holds}};
    if (!cert.check.message.empty()) {
        c["message"] = cert.check.message;
    }
    if (cert.s) {
        c["S"] = matrix_to_json(*cert.s);
        c["S2_minus_lambda2_over_4"] = matrix_to_json(*cert.s_square_defect);
    }
    if (cert.alpha_n) {
        c["alpha_n"] = scalar_to_json(*cert.alpha_n);
        c["phi_normalized"] = cert.phi_normalized;
    }
    out["certificate"] = c;
    const Theorem2Verdict t = theorem2_check(a, r);
    out["theorem2"] = {{"r2_plus_lr_zero", t.r2_plus_lr_zero},
                       {"ata_zero", t.ata_zero},
                       {"phi_ata_zero", t.phi_ata_zero},
                       {"holds", t.report.holds}};
    return out;
}

bool rb_summary_falsifies(const json& summary) {
    if (summary["certificate"].is_object() && !summary["certificate"]["holds"].get<bool>()) {
        return true;
    }
    return summary["theorem2"].is_object() && !summary["theorem2"]["holds"].get<bool>();
}

json decomposition_to_json(const Decomposition& d) {
    json out{{"A1", subspace_to_json(d.a1)}, {"A2", subspace_to_json(d.a2)}};
    if (d.w) {
        out["W"] = subspace_to_json(*d.w);
    }
    if (d.u) {
        out["U"] = subspace_to_json(*d.u);
    }
    return out;
}

} // namespace prelie
