#include "tricover/cli.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "tricover/classify.hpp"
#include "tricover/cover.hpp"
#include "tricover/demos.hpp"
#include "tricover/resolution.hpp"
#include "tricover/spec_file.hpp"

namespace tricover::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

Scalar parse_scalar(const std::string& text, const Field& field) {
  auto p = parse_poly(text, VarList{}, field);
  return p.constant_term();
}

BasePoint parse_point(const std::string& text, const CoverData& cover) {
  Assignment values;
  if (!text.empty()) {
    for (const auto& item : split(text, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "expected name=value in \"" + item + "\"");
      auto name = item.substr(0, eq);
      if (!cover.base_vars().index_of(name)) throw Error(ErrorCode::UnknownVariable, name);
      if (values.count(name)) throw Error(ErrorCode::InvalidArgument, "duplicate value for " + name);
      values.emplace(name, parse_scalar(item.substr(eq + 1), cover.field()));
    }
  }
  return cover.base_point(values);
}

AffineFiberPoint parse_fiber(const std::string& text, const Field& field) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw Error(ErrorCode::InvalidArgument, "fiber point must be z,w");
  return {parse_scalar(parts[0], field), parse_scalar(parts[1], field)};
}

P1Point parse_dir(const std::string& text, const Field& field) {
  auto parts = split(text, ':');
  if (parts.size() != 2) throw Error(ErrorCode::InvalidArgument, "direction must be u:v");
  return P1Point(parse_scalar(parts[0], field), parse_scalar(parts[1], field));
}

std::string point_label(const CoverData& cover, std::span<const Scalar> y) {
  if (y.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i) s += ",";
    s += cover.base_vars()[i] + "=" + y[i].to_string();
  }
  return s;
}

template <class T>
std::string braced(const std::vector<T>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i].to_string();
  return s + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string cubic_values(const ScalarCubic& f) {
  return "(" + f.c3.to_string() + ", " + f.c2.to_string() + ", " + f.c1.to_string() + ", " + f.c0.to_string() + ")";
}

void print_cover(const CoverData& cover, std::ostream& out) {
  out << "cover field=" << cover.field().descriptor() << " vars=" << cover.base_vars().joined() << "\n";
  out << "  a = " << cover.a() << "\n  b = " << cover.b() << "\n  c = " << cover.c() << "\n  d = " << cover.d()
      << "\n";
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const CoverData& cover, std::ostream& out) {
  print_cover(cover, out);
  auto q = build_quadrics(cover);
  out << "quadrics\n";
  for (std::size_t i = 0; i < 3; ++i) out << "  q" << i + 1 << " = " << q[i] << "\n";
  auto m = det_matrix(cover);
  out << "matrix\n";
  for (const auto& row : m.rows) out << "  [" << row[0] << ", " << row[1] << "]\n";
  out << "z-cubic: " << z_cubic(cover).to_string() << "\n";

  std::vector<std::pair<std::string, bool>> checks;

  auto minors = minors_check(cover);
  bool reduced = true, equal = true;
  for (std::size_t k = 0; k < 3; ++k) {
    reduced = reduced && minors.reduced[k].is_zero();
    equal = equal && minors.quadric_residuals[k].is_zero();
  }
  checks.emplace_back("minors reduce to zero modulo the quadrics", reduced);
  checks.emplace_back("quadrics equal minors (q1 = M13, q2 = M12, q3 = -M23)", equal);

  bool quadrics_vanish = true;
  for (const auto& qi : q) quadrics_vanish = quadrics_vanish && normal_form(qi, cover).is_zero();
  checks.emplace_back("normal form of each quadric is zero", quadrics_vanish);

  const std::array<AlgebraElement, 3> basis = {AlgebraElement::unit(cover), AlgebraElement::z(cover),
                                               AlgebraElement::w(cover)};
  bool assoc = true, comm = true;
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      comm = comm && alg_mul(x, y, cover) == alg_mul(y, x, cover);
      for (const auto& z : basis) {
        auto lhs = alg_mul(alg_mul(x, y, cover), z, cover);
        auto rhs = alg_mul(x, alg_mul(y, z, cover), cover);
        assoc = assoc && (lhs - rhs).is_zero();
      }
    }
  }
  checks.emplace_back("associativity on all 27 basis triples", assoc);
  checks.emplace_back("commutativity on all 9 basis pairs", comm);

  auto tr1 = trace(basis[0], cover), trz = trace(basis[1], cover), trw = trace(basis[2], cover);
  checks.emplace_back("trace(1) = 3, trace(z) = 0, trace(w) = 0",
                      tr1 == MultiPoly::constant(cover.field(), cover.base_vars(), 3) && trz.is_zero() &&
                          trw.is_zero());

  bool order_free = true;
  auto z = cover.z(), w = cover.w();
  for (std::uint32_t i = 0; i <= 4; ++i) {
    for (std::uint32_t j = 0; i + j <= 4; ++j) {
      auto mono = z.pow(i) * w.pow(j);
      order_free = order_free &&
                   normal_form(mono, cover, RewriteOrder::ZFirst) == normal_form(mono, cover, RewriteOrder::WFirst);
    }
  }
  checks.emplace_back("rewrite order independence on z^i w^j, i+j <= 4", order_free);

  checks.emplace_back("third-row substitution gives the z-cubic", derive_local_cubic(cover) == z_cubic(cover));

  auto sigma = sigma_cubic(cover);
  checks.emplace_back("sigma cubic is a scalar multiple of the z-cubic", sigma.proportional);

  bool consensus = true;
  for (const auto& e : psi_consensus(cover)) consensus = consensus && e.is_zero();
  checks.emplace_back("the three psi expressions agree modulo the quadrics", consensus);

  std::size_t passed = 0;
  for (const auto& [name, ok] : checks) {
    out << "check " << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
    passed += ok;
  }
  out << "lambda = " << (sigma.lambda ? sigma.lambda->to_string() : std::string("undetermined")) << "\n";
  out << "verify: " << passed << "/" << checks.size() << " checks passed\n";
  return passed == checks.size() ? kOk : kFailed;
}

// ---- classify -------------------------------------------------------------

int cmd_classify(const CoverData& cover, const std::string& point, bool has_point, std::ostream& out) {
  auto disc = branch_discriminant(cover);
  out << "branch discriminant: " << disc << "\n";
  if (!has_point && !cover.base_vars().empty()) return kOk;
  auto y = parse_point(point, cover);
  auto form = z_cubic(cover).at(y);
  auto cls = classify_fiber(cover, y);
  out << "point: " << point_label(cover, y) << "\n";
  out << "cubic: " << cubic_values(form) << "\n";
  out << "fat: " << yes_no(is_fat_base_point(cover, y)) << "\n";
  out << "class: " << to_string(cls) << "\n";
  if (cls != RamificationClass::FatTriple) {
    std::string pattern;
    for (int m : root_pattern(form)) pattern += (pattern.empty() ? "" : ",") + std::to_string(m);
    out << "root multiplicities: " << pattern << "\n";
  }
  auto dval = disc.eval(y);
  out << "discriminant: " << dval << "\n";
  // Unramified exactly when the discriminant is nonzero.
  bool consistent = (cls == RamificationClass::Unramified) == !dval.is_zero();
  out << "consistent: " << yes_no(consistent) << "\n";
  return consistent ? kOk : kFailed;
}

// ---- fibers ---------------------------------------------------------------

bool print_fiber(const CoverData& cover, std::span<const Scalar> y, std::ostream& out) {
  auto r = fiber_report(cover, y);
  bool ok = r.laws_hold;
  out << point_label(cover, y) << " | class=" << to_string(r.cls) << " | fat=" << yes_no(r.fat)
      << " | X=" << braced(r.x_fiber);
  if (r.fat) {
    out << " | Z=P1(" << cover.field().descriptor() << ") " << r.z_fiber.size() << " points";
  } else {
    out << " | Z=" << braced(r.z_fiber) << " | mult=";
    for (std::size_t i = 0; i < r.multiplicities.size(); ++i) out << (i ? "," : "") << r.multiplicities[i];
    auto sums = fiber_sum(cover, y);
    if (sums.split) {
      bool zero = sums.weighted.z.is_zero() && sums.weighted.w.is_zero();
      out << " | sum=" << sums.weighted.to_string();
      ok = ok && zero;
    }
    if (r.x_fiber.size() == 3) {
      bool lines = true;
      for (const auto& check : psi_line_oracle(cover, y)) lines = lines && check.match;
      out << " | lines=" << (lines ? "ok" : "MISMATCH");
      ok = ok && lines;
    }
  }
  out << " | laws=" << (r.laws_hold ? "ok" : "FAIL") << "\n";
  return ok;
}

int cmd_fibers(const CoverData& cover, const std::string& point, bool has_point, bool all, std::ostream& out) {
  if (has_point == all) throw Error(ErrorCode::InvalidArgument, "fibers needs exactly one of --point or --all");
  if (has_point) return print_fiber(cover, parse_point(point, cover), out) ? kOk : kFailed;
  auto points = enumerate_base(cover, kMaxEnumeratedBase);
  std::size_t failures = 0, fat = 0;
  std::map<RamificationClass, std::size_t> tally;
  for (const auto& y : points) {
    if (!print_fiber(cover, y, out)) ++failures;
    auto cls = classify_fiber(cover, y);
    ++tally[cls];
    fat += cls == RamificationClass::FatTriple;
  }
  out << "summary: points=" << points.size();
  for (auto cls : {RamificationClass::Unramified, RamificationClass::SimpleDouble,
                   RamificationClass::CurvilinearTriple, RamificationClass::FatTriple}) {
    out << " " << to_string(cls) << "=" << tally[cls];
  }
  out << " failures=" << failures << "\n";
  return failures == 0 ? kOk : kFailed;
}

// ---- resolve / psi --------------------------------------------------------

int cmd_resolve(const CoverData& cover, const std::string& point, const std::string& dir_text, std::ostream& out) {
  auto y = parse_point(point, cover);
  auto dir = parse_dir(dir_text, cover.field());
  out << "point: " << point_label(cover, y) << "\n";
  out << "direction: " << dir.to_string() << "\n";
  bool member = z_member(cover, y, dir);
  out << "on cubic: " << yes_no(member) << "\n";
  if (!member) throw Error(ErrorCode::NotOnZ, dir.to_string() + " is not on the cubic over this point");
  auto g = phi_inverse(cover, y, dir);
  auto res = gamma_residuals(cover, g);
  out << "phi_inverse: " << g.zw.to_string() << " x " << g.dir.to_string() << "\n";
  out << "gamma residuals: " << res[0] << "," << res[1] << "," << res[2] << "\n";
  auto image = phi(cover, g);
  out << "phi: " << image.second.to_string() << "\n";
  auto x = rho_x(cover, y, dir);
  out << "rho_x: " << x.to_string() << "\n";
  out << "jacobian rank of X: " << jacobian_rank_X(cover, y, x.z, x.w) << "\n";
  auto back = psi(cover, y, x);
  out << "psi(rho_x): " << (back ? back->to_string() : std::string("indeterminate")) << "\n";
  bool fat = is_fat_base_point(cover, y);
  bool ok = image.second == dir && (fat ? !back : back && *back == dir);
  out << "round trip: " << (ok ? "ok" : "FAIL") << "\n";
  return ok ? kOk : kFailed;
}

int cmd_psi(const CoverData& cover, const std::string& point, const std::string& fiber_text, std::ostream& out) {
  auto y = parse_point(point, cover);
  auto x = parse_fiber(fiber_text, cover.field());
  out << "point: " << point_label(cover, y) << "\n";
  out << "fiber point: " << x.to_string() << "\n";
  auto exprs = psi_expressions(cover, y, x);
  const std::array<const char*, 3> names = {"[z+a : b]", "[c : w+d]", "[w-2d : z-2a]"};
  std::optional<P1Point> first;
  bool agree = true;
  for (std::size_t i = 0; i < 3; ++i) {
    out << "  " << names[i] << " = " << (exprs[i] ? exprs[i]->to_string() : std::string("[0:0]")) << "\n";
    if (!exprs[i]) continue;
    if (first) agree = agree && *first == *exprs[i];
    else first = exprs[i];
  }
  out << "psi: " << (first ? first->to_string() : std::string("indeterminate")) << "\n";
  out << "expressions agree: " << yes_no(agree) << "\n";
  if (first) {
    auto form = z_cubic(cover).at(y);
    out << "multiplicity: " << form.root_multiplicity(*first) << "\n";
  }
  out << "jacobian rank of X: " << jacobian_rank_X(cover, y, x.z, x.w) << "\n";
  auto fj = fiber_jacobian(cover, y, x.z, x.w);
  bool tangent_plane = true;
  for (const auto& row : fj) tangent_plane = tangent_plane && row[0].is_zero() && row[1].is_zero();
  out << "fiber tangent space dimension 2: " << yes_no(tangent_plane) << "\n";
  bool ok = agree && (first.has_value() != tangent_plane);
  return ok ? kOk : kFailed;
}

// ---- sigma / reduce / print -----------------------------------------------

int cmd_sigma(const CoverData& cover, std::ostream& out) {
  auto zc = z_cubic(cover);
  auto derived = derive_local_cubic(cover);
  auto sigma = sigma_cubic(cover);
  out << "z-cubic: " << zc.to_string() << "\n";
  out << "derived: " << derived.to_string() << "\n";
  out << "sigma: " << sigma.sigma.to_string() << "\n";
  out << "lambda: " << (sigma.lambda ? sigma.lambda->to_string() : std::string("undetermined")) << "\n";
  out << "proportional: " << yes_no(sigma.proportional) << "\n";
  out << "derived equals z-cubic: " << yes_no(derived == zc) << "\n";
  return sigma.proportional && derived == zc ? kOk : kFailed;
}

int cmd_reduce(const CoverData& cover, const std::string& expr, std::ostream& out) {
  auto p = parse_poly(expr, cover.fiber_vars(), cover.field());
  auto nf = normal_form(p, cover);
  out << "input: " << p << "\n";
  out << "normal form: " << to_poly(nf, cover) << "\n";
  out << "coordinates: " << nf.to_string() << "\n";
  out << "trace: " << trace(nf, cover) << "\n";
  return kOk;
}

// ---- demo -----------------------------------------------------------------

int cmd_demo(const std::string& name, std::uint64_t p, std::ostream& out) {
  auto ex = ConeExample::from_name(name);
  auto census = cone_census(ex, p);
  auto smooth = cone_smoothness_probe(ex, p);
  out << "demo " << ex.name << " p=" << p << "\n";
  out << "  |X(F_" << p << ")| = " << census.x_points << "\n";
  out << "  |Gamma(F_" << p << ")| = " << census.gamma_points << "\n";
  out << "  vertex fiber = " << census.vertex_fiber << " (expected " << p + 1 << ")\n";
  for (const auto& [k, n] : census.fiber_tally) out << "  off-vertex points with " << k << " preimage(s): " << n << "\n";
  out << "  bijective off vertex: " << yes_no(census.bijective_off_vertex) << "\n";
  out << "  Gamma jacobian rank " << smooth.expected_rank << " expected at " << smooth.gamma_points
      << " points, deficient: " << smooth.deficient.size() << "\n";
  for (const auto& d : smooth.deficient) out << "    deficient " << d << "\n";
  out << "  X jacobian rank at vertex: " << smooth.x_vertex_rank << " (codimension " << smooth.x_codimension << ")\n";
  bool ok = census.ok && smooth.ok && smooth.x_vertex_rank < smooth.x_codimension;
  if (ex.kind == ConeKind::SegreCone) {
    auto universal = universal_fat_fiber_size(p);
    out << "  universal cover fiber over fat point = " << universal << "\n";
    ok = ok && universal == census.vertex_fiber;
  }
  out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kFailed;
}

}  // namespace

std::vector<std::string> command_names() {
  return {"verify", "classify", "fibers", "resolve", "psi", "sigma", "reduce", "print", "demo"};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact local models of triple covers and their small resolutions", "tricover"};
  app.require_subcommand(1);

  std::string spec, point, dir, fiber, expr, example;
  std::uint64_t p = 0;
  bool all = false;

  auto* verify = app.add_subcommand("verify", "Check the symbolic identities of a cover");
  verify->add_option("spec", spec, "cover spec file")->required();

  auto* classify = app.add_subcommand("classify", "Branch discriminant and ramification class");
  classify->add_option("spec", spec)->required();
  auto* classify_point = classify->add_option("--point", point, "base point, e.g. s=1,t=2");

  auto* fibers = app.add_subcommand("fibers", "Enumerate fibers of X and Z over F_p");
  fibers->add_option("spec", spec)->required();
  auto* fibers_point = fibers->add_option("--point", point, "base point");
  fibers->add_flag("--all", all, "every base point (at most 10^6)");

  auto* resolve = app.add_subcommand("resolve", "Apply phi^-1, phi and rho_X to a direction");
  resolve->add_option("spec", spec)->required();
  resolve->add_option("--point", point, "base point (omit when there are no base variables)");
  resolve->add_option("--dir", dir, "direction u:v")->required();

  auto* psi_cmd = app.add_subcommand("psi", "Evaluate the line map at a fiber point");
  psi_cmd->add_option("spec", spec)->required();
  psi_cmd->add_option("--point", point, "base point (omit when there are no base variables)");
  psi_cmd->add_option("--fiber", fiber, "fiber point z,w")->required();

  auto* sigma = app.add_subcommand("sigma", "Compare the cover invariant with the z-cubic");
  sigma->add_option("spec", spec)->required();

  auto* reduce = app.add_subcommand("reduce", "Normal form of a polynomial in the base variables and z, w");
  reduce->add_option("spec", spec)->required();
  reduce->add_option("--expr", expr)->required();

  auto* print = app.add_subcommand("print", "Print the cover spec in canonical form");
  print->add_option("spec", spec)->required();

  auto* demo = app.add_subcommand("demo", "Census of a cone and its small resolution");
  demo->add_option("example", example, "quadric-cone or segre-cone")
      ->required()
      ->check(CLI::IsMember({"quadric-cone", "segre-cone"}));
  demo->add_option("--p", p, "prime >= 5")->required();

  std::vector<std::string> argv_storage = {"tricover"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (demo->parsed()) return cmd_demo(example, p, out);
    auto cover = load_cover(spec);
    if (verify->parsed()) return cmd_verify(cover, out);
    if (classify->parsed()) return cmd_classify(cover, point, classify_point->count() > 0, out);
    if (fibers->parsed()) return cmd_fibers(cover, point, fibers_point->count() > 0, all, out);
    if (resolve->parsed()) return cmd_resolve(cover, point, dir, out);
    if (psi_cmd->parsed()) return cmd_psi(cover, point, fiber, out);
    if (sigma->parsed()) return cmd_sigma(cover, out);
    if (reduce->parsed()) return cmd_reduce(cover, expr, out);
    if (print->parsed()) {
      out << print_cover_spec(cover);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tricover::cli
