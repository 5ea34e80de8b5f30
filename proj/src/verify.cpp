#include "prelie/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <map>
#include <random>
#include <set>

namespace prelie {

namespace {

struct Outcome {
    bool ok = true;
    json witness;
    std::string detail;
};

Outcome fail(json witness, std::string detail) { return {false, std::move(witness), std::move(detail)}; }

// Operators of every weight for the small exhaustive cases, computed once per run.
struct CorpusEntry {
    Field field;
    std::size_t n;
    Algebra algebra;
    Scalar lambda;
    std::vector<RBOperator> ops;
};

json where(const CorpusEntry& e) {
    return {{"field", e.field.name()}, {"n", e.n}, {"weight", e.lambda.to_string()}};
}

json with_matrix(json w, const Matrix& m) {
    w["matrix"] = matrix_to_json(m);
    return w;
}

bool is_trivial(const RBOperator& r) {
    const Matrix& m = r.matrix;
    return m.is_zero() || (m + r.weight * Matrix::identity(m.field(), m.rows())).is_zero();
}

Matrix random_matrix(Field f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
    Matrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = f.element(pick(rng));
        }
    }
    return m;
}

Scalar random_rational(Field q, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    return q.from_rational(mpq_class(num(rng), den(rng)));
}

Matrix random_rational_matrix(Field q, std::size_t n, std::mt19937_64& rng) {
    Matrix m(q, n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = random_rational(q, rng);
        }
    }
    return m;
}

std::vector<Matrix> orthogonal_matrices(Field f, std::size_t k) {
    std::vector<Matrix> out;
    if (k == 0) {
        return out;
    }
    const std::uint64_t total = candidate_count(f, k, 100'000'000);
    for (std::uint64_t t = 0; t < total; ++t) {
        Matrix m = matrix_from_index(f, k, t);
        if (is_orthogonal(m)) {
            out.push_back(std::move(m));
        }
    }
    return out;
}

// Signed permutation matrices are orthogonal over every field.
std::vector<Matrix> signed_permutations(Field f, std::size_t k) {
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) {
        perm[i] = i;
    }
    std::vector<Matrix> out;
    do {
        for (std::uint64_t signs = 0; signs < (1ULL << k); ++signs) {
            Matrix m(f, k, k);
            for (std::size_t i = 0; i < k; ++i) {
                m(perm[i], i) = (signs >> i) & 1 ? -f.one() : f.one();
            }
            out.push_back(std::move(m));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Vector e_n(Field f, std::size_t n) { return Vector::unit(f, n, n - 1); }

class Runner {
public:
    explicit Runner(const VerifyConfig& c) : cfg_(c) {
        for (const auto& name : c.fields) {
            fields_.push_back(parse_field_name(name));
        }
        if (c.max_n < 2) {
            throw Error("max_n must be at least 2");
        }
        opts_.cap = c.cap;
        opts_.workers = c.workers;
    }

    VerifyReport run() {
        VerifyReport report{cfg_, {}};
        const std::string& s = cfg_.suite;
        const auto& known = suite_names();
        if (s != "all" && std::find(known.begin(), known.end(), s) == known.end()) {
            throw Error("unknown suite \"" + s + "\"");
        }
        auto want = [&](const char* name) { return s == "all" || s == name; };
        if (want("prelim")) {
            prelim(report);
        }
        if (want("t1")) {
            t1(report);
        }
        if (want("t2")) {
            t2(report);
        }
        if (want("cor")) {
            cor(report);
        }
        if (want("examples")) {
            examples(report);
        }
        if (want("remarks")) {
            remarks(report);
        }
        return report;
    }

private:
    const VerifyConfig& cfg_;
    std::vector<Field> fields_;
    ScanOptions opts_;
    std::vector<CorpusEntry> corpus_;
    bool corpus_ready_ = false;

    std::mt19937_64 rng_for(std::string_view name) const {
        // FNV-1a keeps the per-check streams identical across platforms.
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned char ch : name) {
            h = (h ^ ch) * 1099511628211ULL;
        }
        return std::mt19937_64(cfg_.seed ^ h);
    }

    void check(VerifyReport& rep, const char* suite, const char* name, const char* anchor,
               const std::function<Outcome()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const CapExceededError&) {
            throw;
        } catch (const Error& e) {
            o = fail(nullptr, std::string("unexpected error: ") + e.what());
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.records.push_back({suite, name, anchor, o.ok, o.witness, o.detail, dt});
    }

    const std::vector<CorpusEntry>& corpus() {
        if (!corpus_ready_) {
            const std::pair<const char*, std::size_t> cases[] = {{"gf3", 2}, {"gf5", 2}, {"gf3", 3}};
            for (const auto& [name, n] : cases) {
                Field f = parse_field_name(name);
                Algebra a = build_In(f, n);
                for (const auto& lambda : enumerate_field(f)) {
                    corpus_.push_back({f, n, a, lambda, enumerate_rb_finite(a, lambda, opts_)});
                }
            }
            corpus_ready_ = true;
        }
        return corpus_;
    }

    // ---------------------------------------------------------------- prelim

    void prelim(VerifyReport& rep) {
        check(rep, "prelim", "pre_lie_identity", "I_n is pre-Lie", [&]() -> Outcome {
            for (Field f : fields_) {
                for (std::size_t n = 1; n <= cfg_.max_n; ++n) {
                    Report r = check_identity(build_In(f, n), IdentityKind::pre_lie);
                    if (!r) {
                        return fail({{"field", f.name()}, {"n", n}, {"triple", r.witness}}, r.message);
                    }
                }
            }
            return {};
        });
        check(rep, "prelim", "construction_coherence", "I_n from the dot-product and upper-triangular constructions",
              [&]() -> Outcome {
                  for (Field f : fields_) {
                      for (std::size_t n = 2; n <= std::min<std::size_t>(4, cfg_.max_n); ++n) {
                          const Algebra in = build_In(f, n);
                          if (build_example1(f, n, e_n(f, n)) != in) {
                              return fail({{"field", f.name()}, {"n", n}, {"construction", "dot product"}},
                                          "structure constants differ");
                          }
                          UpperTriangular u = build_Un_circ(f, n);
                          std::vector<std::size_t> idx;
                          for (std::size_t k = 0; k < n; ++k) {
                              idx.push_back(u.first_row[n - 1 - k]);
                          }
                          if (extract_subalgebra(u.algebra, idx) != in) {
                              return fail({{"field", f.name()}, {"n", n}, {"construction", "upper triangular"}},
                                          "structure constants differ");
                          }
                      }
                  }
                  return {};
              });
        check(rep, "prelim", "power_associativity_and_trace", "(e_1e_1)e_1 != e_1(e_1e_1) and tr R_{e_n} = 2",
              [&]() -> Outcome {
                  for (Field f : fields_) {
                      for (std::size_t n = 2; n <= cfg_.max_n; ++n) {
                          const Algebra a = build_In(f, n);
                          const Vector e1 = a.basis(0);
                          const Vector sq = a.multiply(e1, e1);
                          if (a.multiply(sq, e1) != e1 || !a.multiply(e1, sq).is_zero()) {
                              return fail({{"field", f.name()}, {"n", n}}, "unexpected third powers of e_1");
                          }
                          if (trace(right_multiplication(a, e_n(f, n))) != f.from_integer(2)) {
                              return fail({{"field", f.name()}, {"n", n}}, "tr R_{e_n} != 2");
                          }
                      }
                  }
                  return {};
              });
        check(rep, "prelim", "simplicity", "I_n is simple in every characteristic", [&]() -> Outcome {
            for (std::size_t n : {2, 3, 4}) {
                for (const char* name : {"gf2", "gf3", "gf5"}) {
                    Field f = parse_field_name(name, Char2::allow);
                    SimplicityResult r = is_simple_finite(build_In(f, n), opts_.cap, opts_.workers);
                    if (!r.report) {
                        json w{{"field", f.name()}, {"n", n}};
                        if (r.witness_ideal) {
                            w["ideal"] = subspace_to_json(*r.witness_ideal);
                        }
                        return fail(w, r.report.message);
                    }
                }
            }
            Field f3 = parse_field_name("gf3");
            for (std::size_t m : {2, 3}) {
                SimplicityResult r = is_simple_finite(build_I_infinity_truncation(f3, m), opts_.cap, opts_.workers);
                if (!r.report) {
                    return fail({{"truncation", m}}, r.report.message);
                }
            }
            return {};
        });
    }

    // ---------------------------------------------------------------- t1

    void t1(VerifyReport& rep) {
        check(rep, "t1", "derivation_algebra", "Der(I_n) = so_{n-1}(F)", [&]() -> Outcome {
            for (Field f : fields_) {
                for (std::size_t n = 2; n <= cfg_.max_n; ++n) {
                    const Algebra a = build_In(f, n);
                    const auto basis = derivation_basis(a);
                    const std::size_t expect = (n - 1) * (n - 2) / 2;
                    json w{{"field", f.name()}, {"n", n}};
                    if (basis.size() != expect) {
                        w["dim"] = basis.size();
                        return fail(w, "derivation algebra has dimension " + std::to_string(basis.size()) +
                                           ", expected " + std::to_string(expect));
                    }
                    for (const auto& d : basis) {
                        bool border = true;
                        for (std::size_t k = 0; k < n; ++k) {
                            border = border && d(n - 1, k).is_zero() && d(k, n - 1).is_zero();
                        }
                        if (!border || !is_skew_symmetric(d) || !is_derivation(a, d) ||
                            !all_zero(theorem1_residuals(a, {d, MapMode::derivation}))) {
                            return fail(with_matrix(w, d), "basis derivation lacks the skew block shape");
                        }
                    }
                }
            }
            return {};
        });
        check(rep, "t1", "automorphism_group", "Aut(I_n) = O_{n-1}(F)", [&]() -> Outcome {
            const std::pair<const char*, std::size_t> cases[] = {{"gf3", 2}, {"gf3", 3}, {"gf5", 2}};
            for (const auto& [name, n] : cases) {
                Field f = parse_field_name(name);
                const Algebra a = build_In(f, n);
                std::vector<std::uint64_t> got;
                for (const auto& m : enumerate_automorphisms_finite(a, opts_)) {
                    got.push_back(index_of_matrix(m));
                }
                std::vector<std::uint64_t> expect;
                for (const auto& q : orthogonal_matrices(f, n - 1)) {
                    expect.push_back(index_of_matrix(automorphism_from_orthogonal(q)));
                }
                std::sort(expect.begin(), expect.end());
                if (got != expect) {
                    return fail({{"field", f.name()}, {"n", n}, {"found", got.size()}, {"orthogonal", expect.size()}},
                                "automorphisms differ from the embedded orthogonal group");
                }
            }
            Field q = parse_field_name("q");
            Matrix rot = Matrix::from_rows(
                q, 2, {Vector(q, {q.parse("3/5"), q.parse("-4/5")}), Vector(q, {q.parse("4/5"), q.parse("3/5")})});
            if (!is_automorphism(build_In(q, 3), automorphism_from_orthogonal(rot))) {
                return fail({{"field", "Q"}, {"n", 3}}, "rational rotation does not embed as an automorphism");
            }
            return {};
        });
        check(rep, "t1", "theorem1_residuals", "the automorphism and derivation relation systems", [&]() -> Outcome {
            auto agree = [&](const Algebra& a, const Matrix& m) -> std::optional<json> {
                const bool aut_sys = all_zero(theorem1_residuals(a, {m, MapMode::automorphism}));
                const bool der_sys = all_zero(theorem1_residuals(a, {m, MapMode::derivation}));
                if (aut_sys != is_endomorphism(a, m).holds || der_sys != is_derivation(a, m).holds) {
                    return with_matrix({{"field", a.field().name()}, {"n", a.dim()}}, m);
                }
                return std::nullopt;
            };
            Field f3 = parse_field_name("gf3");
            const Algebra a2 = build_In(f3, 2);
            for (std::uint64_t t = 0; t < candidate_count(f3, 2, opts_.cap); ++t) {
                if (auto w = agree(a2, matrix_from_index(f3, 2, t))) {
                    return fail(*w, "relation system disagrees with the direct check");
                }
            }
            Field f5 = parse_field_name("gf5");
            auto rng = rng_for("theorem1_residuals");
            for (std::size_t n : {3, 4}) {
                const Algebra a = build_In(f5, n);
                std::vector<Matrix> samples;
                for (int s = 0; s < 500; ++s) {
                    samples.push_back(random_matrix(f5, n, rng));
                }
                for (const auto& d : derivation_basis(a)) {
                    samples.push_back(d);
                }
                for (const auto& q : signed_permutations(f5, n - 1)) {
                    samples.push_back(automorphism_from_orthogonal(q));
                }
                for (const auto& m : samples) {
                    if (auto w = agree(a, m)) {
                        return fail(*w, "relation system disagrees with the direct check");
                    }
                }
            }
            return {};
        });
    }

    // ---------------------------------------------------------------- t2

    void t2(VerifyReport& rep) {
        check(rep, "t2", "rb_residuals", "the eight-group RB relation system", [&]() -> Outcome {
            auto agree = [&](const Algebra& a, const RBOperator& r) -> std::optional<json> {
                if (all_zero(rb_residuals_In(a, r)) != is_rb(a, r).holds) {
                    json w = with_matrix({{"field", a.field().name()}, {"n", a.dim()}}, r.matrix);
                    w["weight"] = r.weight.to_string();
                    return w;
                }
                return std::nullopt;
            };
            Field f3 = parse_field_name("gf3");
            const Algebra a2 = build_In(f3, 2);
            for (const auto& lambda : enumerate_field(f3)) {
                for (std::uint64_t t = 0; t < candidate_count(f3, 2, opts_.cap); ++t) {
                    if (auto w = agree(a2, {matrix_from_index(f3, 2, t), lambda})) {
                        return fail(*w, "relation system disagrees with the axiom");
                    }
                }
            }
            Field f5 = parse_field_name("gf5");
            auto rng = rng_for("rb_residuals");
            std::uniform_int_distribution<std::uint64_t> pick(0, 4);
            for (std::size_t n : {3, 4}) {
                const Algebra a = build_In(f5, n);
                for (int s = 0; s < 500; ++s) {
                    Matrix m = random_matrix(f5, n, rng);
                    if (auto w = agree(a, {m, f5.element(pick(rng))})) {
                        return fail(*w, "relation system disagrees with the axiom");
                    }
                }
            }
            for (const auto& e : corpus()) {
                for (const auto& r : e.ops) {
                    if (auto w = agree(e.algebra, r)) {
                        return fail(*w, "relation system rejects an enumerated operator");
                    }
                }
            }
            return {};
        });
        check(rep, "t2", "theorem2", "R^2 + lambda R = 0 and A^T A = 0 up to phi", [&]() -> Outcome {
            std::size_t total = 0;
            std::size_t direct = 0;
            for (const auto& e : corpus()) {
                for (const auto& r : e.ops) {
                    Theorem2Verdict v = theorem2_check(e.algebra, r);
                    if (!v.report) {
                        return fail(with_matrix(where(e), r.matrix), v.report.message);
                    }
                    ++total;
                    direct += v.ata_zero ? 1 : 0;
                }
            }
            return {true, nullptr,
                    std::to_string(total) + " operators; A^T A = 0 directly for " + std::to_string(direct)};
        });
        check(rep, "t2", "phi_closure", "phi(R) = -R - lambda E is again RB", [&]() -> Outcome {
            for (const auto& e : corpus()) {
                std::set<std::uint64_t> set;
                for (const auto& r : e.ops) {
                    set.insert(index_of_matrix(r.matrix));
                }
                for (const auto& r : e.ops) {
                    RBOperator p = phi_conjugate(r);
                    if (!set.count(index_of_matrix(p.matrix)) || phi_conjugate(p) != r) {
                        return fail(with_matrix(where(e), r.matrix), "phi image missing from the enumeration");
                    }
                }
            }
            return {};
        });
        check(rep, "t2", "case_analysis", "Case 1: A = S - (lambda/2)E with S skew, S^2 = (lambda^2/4)E; Case 2",
              [&]() -> Outcome {
                  std::map<std::string, std::size_t> counts;
                  for (const auto& e : corpus()) {
                      for (const auto& r : e.ops) {
                          CaseCertificate c = classify_case(e.algebra, r);
                          if (!c.check) {
                              return fail(with_matrix(where(e), r.matrix), c.check.message);
                          }
                          if (c.kind == RBCase::case1 && e.n % 2 == 1 && !e.lambda.is_zero()) {
                              return fail(with_matrix(where(e), r.matrix), "case-1 operator of nonzero weight, odd n");
                          }
                          ++counts[to_string(c.kind)];
                      }
                  }
                  Field qi = parse_field_name("qi");
                  const RBOperator ex5 = example5_operator(qi);
                  CaseCertificate c5 = classify_case(build_In(qi, 4), ex5);
                  if (c5.kind != RBCase::case1 || !c5.check || *c5.s != ex5.matrix || !(*c5.s * *c5.s).is_zero()) {
                      return fail({{"example", 5}}, "expected case 1 with S = A and S^2 = 0");
                  }
                  CaseCertificate c4 = classify_case(build_In(qi, 3), example4_operator(qi, 3));
                  if (c4.kind != RBCase::case2 || !c4.check || !c4.alpha_n->is_zero()) {
                      return fail({{"example", 4}}, "expected case 2 with alpha_n = 0");
                  }
                  json w;
                  for (const auto& [k, v] : counts) {
                      w[k] = v;
                  }
                  return {true, nullptr, "case counts " + w.dump()};
              });
        check(rep, "t2", "lagrangian_structure", "ker(R + lambda E) and im(R) are Lagrangian subalgebras",
              [&]() -> Outcome {
                  for (const auto& e : corpus()) {
                      const Vector en = e_n(e.field, e.n);
                      const Matrix id = Matrix::identity(e.field, e.n);
                      for (const auto& r : e.ops) {
                          if (!e.lambda.is_zero()) {
                              RBOperator s = r;
                              if (!member(kernel(s.matrix), en)) {
                                  s = phi_conjugate(r);
                              }
                              if (!member(kernel(s.matrix), en)) {
                                  continue;  // e_n lies in neither kernel (case 1)
                              }
                              const Subspace k = kernel(s.matrix + e.lambda * id);
                              if (!is_lagrangian(k) || !is_subalgebra(e.algebra, k)) {
                                  return fail(with_matrix(where(e), r.matrix),
                                              "ker(R + lambda E) is not a Lagrangian subalgebra");
                              }
                          } else if (classify_case(e.algebra, r).kind == RBCase::case2) {
                              const Subspace im = image(r.matrix);
                              if (!(r.matrix * r.matrix).is_zero() || !is_lagrangian(im) ||
                                  !is_subalgebra(e.algebra, im)) {
                                  return fail(with_matrix(where(e), r.matrix),
                                              "im(R) is not a Lagrangian subalgebra with R^2 = 0");
                              }
                          }
                      }
                  }
                  return {};
              });
        check(rep, "t2", "decomposition_shapes", "parts of a subalgebra decomposition avoiding e_n are Lagrangian",
              [&]() -> Outcome {
                  std::map<std::string, std::size_t> counts;
                  const std::pair<const char*, std::size_t> cases[] = {{"gf3", 2}, {"gf5", 2}, {"gf3", 3}};
                  for (const auto& [name, n] : cases) {
                      Field f = parse_field_name(name);
                      for (const auto& c : lagrangian_decompositions_finite(build_In(f, n), opts_)) {
                          if (c.shape == DecompositionShape::violation) {
                              json w = decomposition_to_json(c.decomposition);
                              w["field"] = f.name();
                              return fail(w, "a part without e_n is not Lagrangian");
                          }
                          if (std::string(name) == "gf3" && n == 2 && c.decomposition.a1.dim() == 1 &&
                              c.decomposition.w && c.decomposition.w->dim() == 1) {
                              return fail(decomposition_to_json(c.decomposition),
                                          "a one-dimensional Lagrangian part over GF(3)");
                          }
                          ++counts[f.name() + " n=" + std::to_string(n) + " " + to_string(c.shape)];
                      }
                  }
                  Field f5 = parse_field_name("gf5");
                  auto decs = lagrangian_decompositions_finite(build_In(f5, 2), opts_);
                  for (int sign : {1, -1}) {
                      Decomposition d = example6_decomposition(f5, sign);
                      bool found = std::any_of(decs.begin(), decs.end(), [&](const ClassifiedDecomposition& c) {
                          return c.decomposition.a1 == d.a1 && c.decomposition.a2 == d.a2 &&
                                 c.shape == DecompositionShape::normal_form;
                      });
                      if (!found) {
                          return fail(decomposition_to_json(d), "expected decomposition missing over GF(5)");
                      }
                  }
                  json w;
                  for (const auto& [k, v] : counts) {
                      w[k] = v;
                  }
                  return {true, nullptr, "shapes " + w.dump()};
              });
    }

    // ---------------------------------------------------------------- cor

    void cor(VerifyReport& rep) {
        check(rep, "cor", "nonzero_weight_splitting", "nonzero weight RB operators are splitting", [&]() -> Outcome {
            for (const auto& e : corpus()) {
                if (e.lambda.is_zero()) {
                    continue;
                }
                for (const auto& r : e.ops) {
                    RBOperator p = splitting_from_decomposition(e.algebra, kernel_decomposition(r), e.lambda);
                    if (p != r) {
                        return fail(with_matrix(where(e), r.matrix), "not reproduced by its kernel decomposition");
                    }
                }
            }
            return {};
        });
        check(rep, "cor", "rb_index_bound", "rb_lambda(I_n) <= 2", [&]() -> Outcome {
            json detail = json::object();
            for (const auto& e : corpus()) {
                unsigned index = 1;
                bool only_trivial = true;
                for (const auto& r : e.ops) {
                    auto m = rb_index_of(r);
                    if (!m || *m > 2) {
                        return fail(with_matrix(where(e), r.matrix), "operator needs more than two factors");
                    }
                    index = std::max(index, *m);
                    only_trivial = only_trivial && is_trivial(r);
                }
                if (only_trivial && index != 1) {
                    return fail(where(e), "only trivial operators but index != 1");
                }
                if (e.field.order() == 5 && e.n == 2 && e.lambda.is_one() && index != 2) {
                    return fail(where(e), "expected index 2");
                }
                detail[e.field.name() + " n=" + std::to_string(e.n) + " w=" + e.lambda.to_string()] = index;
            }
            Field qi = parse_field_name("qi");
            if (rb_index_of(example4_operator(qi, 3)) != 2u) {
                return fail({{"example", 4}}, "nonzero square-zero operator should have index 2");
            }
            return {true, nullptr, detail.dump()};
        });
        check(rep, "cor", "sum_of_squares_triviality", "sums of squares force trivial operators", [&]() -> Outcome {
            Field q = parse_field_name("q");
            auto rng = rng_for("sum_of_squares_triviality");
            const Algebra a3 = build_In(q, 3);
            for (int s = 0; s < 1000; ++s) {
                Matrix m = random_rational_matrix(q, 3, rng);
                const Scalar lambda = random_rational(q, rng);
                if (Report t = totally_real_mechanism_check(m); !t) {
                    return fail(with_matrix({{"sample", s}}, m), t.message);
                }
                RBOperator r{m, lambda};
                if (is_rb(a3, r) && !is_trivial(r)) {
                    return fail(with_matrix({{"sample", s}, {"weight", lambda.to_string()}}, m),
                                "nontrivial rational RB operator");
                }
                if (!is_rb(a3, {Matrix(q, 3, 3), lambda}) || !is_rb(a3, {-lambda * Matrix::identity(q, 3), lambda})) {
                    return fail({{"weight", lambda.to_string()}}, "trivial operators rejected");
                }
            }
            if (!totally_real_mechanism_check(Matrix(q, 3, 3))) {
                return fail(nullptr, "zero matrix rejected");
            }
            for (const auto& e : corpus()) {
                if (e.n != 2 || e.lambda.is_zero()) {
                    continue;
                }
                const bool nontrivial = std::any_of(e.ops.begin(), e.ops.end(), [](const RBOperator& r) {
                    return !is_trivial(r);
                });
                const bool has_i = sqrt_in_field(e.field, e.field.from_integer(-1)).has_value();
                if (nontrivial != has_i) {
                    return fail(where(e), has_i ? "no nontrivial operator although sqrt(-1) exists"
                                                : "nontrivial operator without sqrt(-1)");
                }
            }
            return {};
        });
    }

    // ---------------------------------------------------------------- examples

    void examples(VerifyReport& rep) {
        check(rep, "examples", "weight0_case2_operator", "a weight-0 Case-2 operator built from 1/sqrt(2-n)", [&]() -> Outcome {
            std::vector<std::pair<Field, std::size_t>> cases{{parse_field_name("gf5"), 3}, {parse_field_name("qi"), 3}};
            for (Field f : fields_) {
                for (std::size_t n = 3; n <= cfg_.max_n; ++n) {
                    const Scalar d = f.from_integer(2 - static_cast<std::int64_t>(n));
                    if (!d.is_zero() && sqrt_in_field(f, d)) {
                        cases.emplace_back(f, n);
                    }
                }
            }
            for (const auto& [f, n] : cases) {
                const Algebra a = build_In(f, n);
                const RBOperator r = example4_operator(f, n);
                if (!is_rb(a, r) || classify_case(a, r).kind != RBCase::case2 || !theorem2_check(a, r).ata_zero) {
                    return fail(with_matrix({{"field", f.name()}, {"n", n}}, r.matrix), "example operator fails");
                }
            }
            try {
                example4_operator(parse_field_name("q"), 3);
                return fail({{"field", "Q"}}, "missing square root not detected");
            } catch (const Error&) {
            }
            try {
                example4_operator(parse_field_name("gf3"), 5);
                return fail({{"field", "GF(3)"}, {"n", 5}}, "vanishing 2 - n not detected");
            } catch (const Error&) {
            }
            return {true, nullptr, std::to_string(cases.size()) + " instances"};
        });
        check(rep, "examples", "skew_case1_operator", "a skew weight-0 Case-1 operator on I_4", [&]() -> Outcome {
            for (const char* name : {"qi", "gf5"}) {
                Field f = parse_field_name(name);
                const Algebra a = build_In(f, 4);
                const RBOperator r = example5_operator(f);
                if (!is_rb(a, r) || !is_skew_symmetric(r.matrix) || !is_splitting(r)) {
                    return fail(with_matrix({{"field", f.name()}}, r.matrix), "example operator fails");
                }
                for (std::size_t i = 0; i < 3; ++i) {
                    if (r.matrix(i, 3) != -r.matrix(3, i)) {
                        return fail({{"field", f.name()}, {"i", i + 1}}, "v_in != -alpha_i");
                    }
                }
            }
            return {};
        });
        check(rep, "examples", "i2_lagrangian_splittings", "I_2 = Span{e_1 +- i e_2} + Span{e_2}", [&]() -> Outcome {
            for (const char* name : {"qi", "gf5"}) {
                Field f = parse_field_name(name);
                const Algebra a = build_In(f, 2);
                std::vector<Matrix> ops;
                for (int sign : {1, -1}) {
                    const Decomposition d = example6_decomposition(f, sign);
                    json w{{"field", f.name()}, {"sign", sign}};
                    if (!is_lagrangian(d.a1) || !is_direct_sum(d.a1, d.a2, 2) || !is_subalgebra(a, d.a1) ||
                        !is_subalgebra(a, d.a2)) {
                        return fail(w, "decomposition parts fail");
                    }
                    for (std::int64_t l : {1, -1, 2}) {
                        const RBOperator r = splitting_from_decomposition(a, d, f.from_integer(l));
                        if (!is_rb(a, r) || !is_splitting(r) || is_trivial(r)) {
                            w["weight"] = l;
                            return fail(with_matrix(w, r.matrix), "splitting operator fails");
                        }
                        if (l == 1) {
                            ops.push_back(r.matrix);
                        }
                    }
                }
                if (ops[0] == ops[1]) {
                    return fail({{"field", f.name()}}, "the two signs give the same operator");
                }
            }
            return {};
        });
        check(rep, "examples", "i2_nonzero_weight_operators",
              "nontrivial nonzero-weight operators on I_2 come from one-dimensional subalgebra pairs",
              [&]() -> Outcome {
                  Field f5 = parse_field_name("gf5");
                  const Algebra a = build_In(f5, 2);
                  const Scalar one = f5.one();
                  std::set<std::uint64_t> from_decs;
                  for (const auto& c : lagrangian_decompositions_finite(a, opts_)) {
                      if (c.decomposition.a1.dim() == 1) {
                          from_decs.insert(
                              index_of_matrix(splitting_from_decomposition(a, c.decomposition, one).matrix));
                      }
                  }
                  std::set<std::uint64_t> enumerated;
                  for (const auto& r : enumerate_rb_finite(a, one, opts_)) {
                      if (!is_trivial(r)) {
                          enumerated.insert(index_of_matrix(r.matrix));
                      }
                  }
                  if (from_decs != enumerated) {
                      return fail({{"from_decompositions", from_decs.size()}, {"enumerated", enumerated.size()}},
                                  "enumeration and decompositions disagree");
                  }
                  return {true, nullptr, std::to_string(enumerated.size()) + " nontrivial weight-1 operators over GF(5)"};
              });
    }

    // ---------------------------------------------------------------- remarks

    void remarks(VerifyReport& rep) {
        check(rep, "remarks", "unital_lifts", "maps extend to the unital hull", [&]() -> Outcome {
            for (Field f : fields_) {
                for (std::size_t n = 2; n <= cfg_.max_n; ++n) {
                    const Algebra a = build_In(f, n);
                    const Algebra u = unital_extension(a);
                    json w{{"field", f.name()}, {"n", n}};
                    for (const auto& d : derivation_basis(a)) {
                        if (!is_derivation(u, unital_lift(d, f.zero()))) {
                            return fail(with_matrix(w, d), "lifted derivation fails");
                        }
                    }
                    if (n <= 4) {
                        for (const auto& q : signed_permutations(f, n - 1)) {
                            Matrix m = automorphism_from_orthogonal(q);
                            if (!is_automorphism(u, unital_lift(m, f.one()))) {
                                return fail(with_matrix(w, m), "lifted automorphism fails");
                            }
                        }
                    }
                }
            }
            Field f3 = parse_field_name("gf3");
            for (std::size_t n : {2, 3}) {
                const Algebra u = unital_extension(build_In(f3, n));
                for (const auto& m : enumerate_automorphisms_finite(build_In(f3, n), opts_)) {
                    if (!is_automorphism(u, unital_lift(m, f3.one()))) {
                        return fail(with_matrix({{"field", "GF(3)"}, {"n", n}}, m), "lifted automorphism fails");
                    }
                }
            }
            for (const auto& e : corpus()) {
                if (e.field.order() != 3 || e.n != 2) {
                    continue;
                }
                const Algebra u = unital_extension(e.algebra);
                for (const auto& r : e.ops) {
                    if (!is_rb(u, {unital_lift(r.matrix, e.field.zero()), e.lambda})) {
                        return fail(with_matrix(where(e), r.matrix), "lifted RB operator fails");
                    }
                }
            }
            return {};
        });
        check(rep, "remarks", "plus_algebra", "(I_n)^+ is commutative and flexible; simplicity depends on F",
              [&]() -> Outcome {
                  for (const char* name : {"gf5", "gf7"}) {
                      Field f = parse_field_name(name);
                      if (!is_simple_finite(plus_algebra(build_In(f, 2)), opts_.cap, opts_.workers).report) {
                          return fail({{"field", f.name()}}, "expected a simple algebra");
                      }
                  }
                  Field f9 = parse_field_name("gf9");
                  const Algebra p9 = plus_algebra(build_In(f9, 2));
                  SimplicityResult r = is_simple_finite(p9, opts_.cap, opts_.workers);
                  if (r.report || !r.witness_ideal || !is_ideal(p9, *r.witness_ideal) || r.witness_ideal->dim() == 0 ||
                      r.witness_ideal->dim() == 2) {
                      return fail({{"field", f9.name()}}, "expected a proper ideal");
                  }
                  const Scalar t = *sqrt_in_field(f9, f9.from_integer(2));
                  const Subspace w = Subspace::span(f9, 2, {Vector(f9, {f9.one(), t})});
                  if (t * t != f9.from_integer(2) || !is_ideal(p9, w)) {
                      return fail({{"t", t.to_string()}}, "Span{e_1 + t e_2} is not an ideal");
                  }
                  for (Field f : fields_) {
                      for (std::size_t n = 2; n <= std::min<std::size_t>(4, cfg_.max_n); ++n) {
                          const Algebra p = plus_algebra(build_In(f, n));
                          for (auto kind : {IdentityKind::commutative, IdentityKind::flexible}) {
                              if (Report id = check_identity(p, kind); !id) {
                                  return fail({{"field", f.name()}, {"n", n}, {"tuple", id.witness}}, id.message);
                              }
                          }
                      }
                  }
                  return {true, nullptr, "GF(9) witness ideal " + subspace_to_json(*r.witness_ideal).dump()};
              });
        check(rep, "remarks", "truncation_isomorphism", "finite pieces of I_infinity are I_n", [&]() -> Outcome {
            for (Field f : fields_) {
                for (std::size_t m = 1; m < cfg_.max_n; ++m) {
                    std::vector<std::size_t> perm(m + 1);
                    perm[0] = m;
                    for (std::size_t i = 1; i <= m; ++i) {
                        perm[i] = i - 1;
                    }
                    if (permute_basis(build_I_infinity_truncation(f, m), perm) != build_In(f, m + 1)) {
                        return fail({{"field", f.name()}, {"m", m}}, "truncation is not I_{m+1}");
                    }
                }
            }
            Field f3 = parse_field_name("gf3");
            for (std::size_t m : {2, 3}) {
                if (!is_simple_finite(build_I_infinity_truncation(f3, m), opts_.cap, opts_.workers).report) {
                    return fail({{"m", m}}, "truncation not simple over GF(3)");
                }
            }
            return {};
        });
    }
};

} // namespace

bool VerifyReport::passed() const {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.passed; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"prelim", "t1", "t2", "cor", "examples", "remarks"};
    return names;
}

VerifyReport verify_theorems(const VerifyConfig& config) { return Runner(config).run(); }

json to_json(const VerifyReport& report, bool with_timing) {
    json fields = json::array();
    for (const auto& f : report.config.fields) {
        fields.push_back(f);
    }
    json records = json::array();
    for (const auto& r : report.records) {
        json j{{"suite", r.suite}, {"name", r.name}, {"anchor", r.anchor}, {"verdict", r.passed ? "pass" : "fail"}};
        if (!r.witness.is_null()) {
            j["witness"] = r.witness;
        }
        if (!r.detail.empty()) {
            j["detail"] = r.detail;
        }
        if (with_timing) {
            j["elapsed"] = r.elapsed_seconds;
        }
        records.push_back(std::move(j));
    }
    return {{"suite", report.config.suite},
            {"seed", report.config.seed},
            {"max_n", report.config.max_n},
            {"fields", fields},
            {"verdict", report.passed() ? "pass" : "fail"},
            {"records", records}};
}

} // namespace prelie
