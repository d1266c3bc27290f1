mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qhopf::coinduce::{
    build_coinduced, character_consistency, check_rep_relations, classical_limit, commutator_closed_forms,
    laurent_report, Character,
};
use qhopf::duality::{check_uq_relations, reconcile_mk, verify_pairing_axioms, PairingContext, Side};
use qhopf::finite::{
    check_comodule_induction, check_prop2, class_values, fmt_class_function, fmt_scalar, induce_rep,
    one_dim_characters, parse_scalar, verify_suite, FiniteGroup, FiniteRep,
};
use qhopf::galilei::{self, check_classical_limit, check_relations_as_operators, differential_test, GalileiOperators};
use qhopf::hopf::{check_hopf_axioms, from_document, to_document};
use qhopf::parse::parse_element;
use qhopf::{Algebra, NcElement, Presentation, Rational};

use output::Output;

#[derive(Parser)]
#[command(name = "qhopf", version, about = "Exact computations in the quantum Galilei Hopf pair")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Pretty-print algebra output with Greek letters and superscripts.
    #[arg(long, global = true)]
    unicode: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraName {
    Fq,
    Uq,
}

#[derive(Args, Clone, Copy)]
struct AlgebraOpts {
    #[arg(long, value_enum, default_value = "fq")]
    algebra: AlgebraName,
    /// Keep powers of `a` up to this order.
    #[arg(long, default_value_t = 4)]
    a_order: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Dual,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Hopf,
    Pairing,
    Actions,
    Coinduce,
    Finite,
    Mk,
}

#[derive(Args)]
struct CharacterOpts {
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    /// Truncation order of the v-series.
    #[arg(long, default_value_t = 8)]
    order: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Normal-order an expression.
    Normalize {
        expr: String,
        #[command(flatten)]
        alg: AlgebraOpts,
    },
    /// Coproduct of an expression.
    Coproduct {
        expr: String,
        #[command(flatten)]
        alg: AlgebraOpts,
    },
    /// Counit of an expression.
    Counit {
        expr: String,
        #[command(flatten)]
        alg: AlgebraOpts,
    },
    /// Antipode of an expression.
    Antipode {
        expr: String,
        #[command(flatten)]
        alg: AlgebraOpts,
    },
    /// Pairing ⟨h, f⟩ of a U_q element with an F_q element.
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long, default_value_t = 4)]
        a_order: u32,
    },
    /// Regular action of a U_q element on an F_q element.
    Act {
        /// U_q element
        #[arg(allow_hyphen_values = true)]
        h: String,
        /// F_q element
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "dual")]
        method: Method,
        #[arg(long, default_value_t = 4)]
        a_order: u32,
    },
    /// Character-coinduced representation on truncated v-series.
    Coinduce {
        #[command(flatten)]
        chi: CharacterOpts,
        /// Also run the relation, character and limit checks.
        #[arg(long)]
        check: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        alg: AlgebraOpts,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        #[command(flatten)]
        chi: CharacterOpts,
        /// For `hopf`: check a presentation document instead of a built-in algebra.
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
    /// Induce a one-dimensional representation of a finite group.
    InduceFinite {
        /// Built-in name (Z1..Z12, S3, D4, Q8) or path to a table file.
        #[arg(long)]
        group: String,
        /// Comma-separated labels of elements generating the subgroup.
        #[arg(long, allow_hyphen_values = true)]
        subgroup: String,
        /// `trivial`, or comma-separated character values on the listed generators.
        #[arg(long, default_value = "trivial", allow_hyphen_values = true)]
        rep: String,
        /// Also run the invariant-subspace and comodule-induction checks.
        #[arg(long)]
        check: bool,
    },
    /// Print a presentation document.
    DumpPresentation {
        #[command(flatten)]
        alg: AlgebraOpts,
        /// For U_q, omit the structure maps derived from the pairing.
        #[arg(long)]
        bare: bool,
    },
}

/// Input errors map to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Run = Result<Output, UsageError>;

fn context(a_order: u32) -> Result<PairingContext, UsageError> {
    Ok(PairingContext::new(a_order)?)
}

fn presentation(opts: AlgebraOpts) -> Result<Presentation, UsageError> {
    Ok(match opts.algebra {
        AlgebraName::Fq => galilei::fq(),
        AlgebraName::Uq => context(opts.a_order)?.uq,
    })
}

fn parse(text: &str, alg: &Algebra) -> Result<NcElement, UsageError> {
    Ok(parse_element(text, alg)?)
}

fn algebra_label(opts: AlgebraOpts) -> &'static str {
    match opts.algebra {
        AlgebraName::Fq => "fq",
        AlgebraName::Uq => "uq",
    }
}

fn structure_map(name: &str, expr: &str, opts: AlgebraOpts, unicode: bool) -> Run {
    let pres = presentation(opts)?;
    let e = parse(expr, &pres.algebra)?;
    let mut out = Output::new(name, unicode);
    out.input("expr", expr).input("algebra", algebra_label(opts));
    if matches!(opts.algebra, AlgebraName::Uq) {
        out.input("a_order", opts.a_order);
    }
    let text = match name {
        "coproduct" => pres.fmt_tensor(&pres.coproduct(&e)?),
        "counit" => pres.counit(&e)?.to_string(),
        _ => pres.fmt(&pres.antipode(&e)?),
    };
    out.value("", &text);
    Ok(out)
}

fn rational(text: &str) -> Result<Rational, UsageError> {
    text.trim()
        .parse::<Rational>()
        .map_err(|_| UsageError(format!("'{text}' is not a rational number")))
}

fn character(opts: &CharacterOpts, out: &mut Output) -> Result<Character, UsageError> {
    match (&opts.alpha, &opts.beta, &opts.gamma) {
        (None, None, None) => {
            out.input("character", "symbolic");
            Ok(Character::symbolic())
        }
        (Some(a), Some(b), Some(g)) => {
            out.input("alpha", a).input("beta", b).input("gamma", g);
            Ok(Character::numeric(rational(a)?, rational(b)?, rational(g)?))
        }
        _ => Err(UsageError("give all of --alpha, --beta, --gamma or none of them".into())),
    }
}

fn coinduce(chi_opts: &CharacterOpts, check: bool, unicode: bool) -> Run {
    let mut out = Output::new("coinduce", unicode);
    let chi = character(chi_opts, &mut out)?;
    out.input("order", chi_opts.order);
    let rep = build_coinduced(&chi, chi_opts.order)?;
    out.value("I", &rep.i.to_string());
    out.value("P", &rep.p.to_string());
    out.value("H", &rep.h.to_string());
    out.value("N", "d/dv");
    if check {
        for r in [
            check_rep_relations(&rep),
            commutator_closed_forms(&rep),
            character_consistency(&rep),
            classical_limit(&rep),
            laurent_report(&rep),
        ] {
            out.report(&r);
        }
    }
    Ok(out)
}

struct VerifyArgs<'a> {
    suite: Suite,
    opts: AlgebraOpts,
    max_degree: u32,
    chi: &'a CharacterOpts,
    presentation: Option<&'a Path>,
}

fn verify(args: VerifyArgs, unicode: bool) -> Run {
    let VerifyArgs {
        suite,
        opts,
        max_degree,
        chi: chi_opts,
        presentation: doc,
    } = args;
    let name = match suite {
        Suite::Hopf => "hopf",
        Suite::Pairing => "pairing",
        Suite::Actions => "actions",
        Suite::Coinduce => "coinduce",
        Suite::Finite => "finite",
        Suite::Mk => "mk",
    };
    let mut out = Output::new(&format!("verify {name}"), unicode);
    match suite {
        Suite::Hopf => {
            out.input("max_degree", max_degree);
            let pres = match doc {
                Some(path) => {
                    out.input("presentation", path.display());
                    from_document(&std::fs::read_to_string(path)?)?
                }
                None => {
                    out.input("algebra", algebra_label(opts));
                    if matches!(opts.algebra, AlgebraName::Uq) {
                        out.input("a_order", opts.a_order);
                    }
                    presentation(opts)?
                }
            };
            if !pres.is_complete() {
                return Err(UsageError("the presentation lacks coproduct, counit or antipode entries".into()));
            }
            out.report(&check_hopf_axioms(&pres, max_degree));
        }
        Suite::Pairing => {
            out.input("a_order", opts.a_order).input("max_degree", max_degree);
            let ctx = context(opts.a_order)?;
            out.report(&verify_pairing_axioms(&ctx, max_degree));
            out.report(&check_uq_relations(&ctx));
        }
        Suite::Actions => {
            out.input("a_order", opts.a_order).input("max_degree", max_degree);
            let ctx = context(opts.a_order)?;
            let ops = GalileiOperators::default();
            out.report(&differential_test(&ctx, &ops, max_degree));
            out.report(&check_relations_as_operators(&ctx, &ops, max_degree));
            out.report(&check_classical_limit(&ops, max_degree));
        }
        Suite::Coinduce => {
            let chi = character(chi_opts, &mut out)?;
            out.input("order", chi_opts.order);
            for n in 2..=chi_opts.order {
                let rep = build_coinduced(&chi, n)?;
                out.report(&check_rep_relations(&rep));
                out.report(&character_consistency(&rep));
                out.report(&classical_limit(&rep));
                out.report(&laurent_report(&rep));
            }
        }
        Suite::Finite => {
            out.report(&verify_suite()?);
        }
        Suite::Mk => {
            out.input("a_order", opts.a_order);
            out.report(&reconcile_mk(&context(opts.a_order)?).0);
        }
    }
    Ok(out)
}

fn load_group(source: &str) -> Result<FiniteGroup, UsageError> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("G");
        Ok(FiniteGroup::parse_table(name, &text)?)
    } else {
        Ok(FiniteGroup::builtin(source)?)
    }
}

fn split_list(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn induce_finite(group: &str, subgroup: &str, rep: &str, check: bool, unicode: bool) -> Run {
    let g = load_group(group)?;
    let mut out = Output::new("induce-finite", unicode);
    out.input("group", g.name()).input("subgroup", subgroup).input("rep", rep);
    let gens = split_list(subgroup)
        .into_iter()
        .map(|l| g.element_by_label(l).ok_or_else(|| UsageError(format!("no element labelled '{l}' in {}", g.name()))))
        .collect::<Result<Vec<_>, _>>()?;
    let k = g.generated(&gens);
    let chi = if rep.trim() == "trivial" {
        FiniteRep::trivial(&g, &k)?
    } else {
        let values = split_list(rep)
            .into_iter()
            .map(|v| parse_scalar(v).ok_or_else(|| UsageError(format!("'{v}' is not a Gaussian rational"))))
            .collect::<Result<Vec<_>, _>>()?;
        if values.len() != gens.len() {
            return Err(UsageError(format!(
                "{} character values for {} generators",
                values.len(),
                gens.len()
            )));
        }
        let found = one_dim_characters(&g, &k)?
            .into_iter()
            .find(|c| gens.iter().zip(&values).all(|(x, v)| &c[x] == v))
            .ok_or_else(|| UsageError("the values do not define a character of the subgroup".into()))?;
        FiniteRep::one_dimensional(&g, &found)?
    };
    let ind = induce_rep(&g, &k, &chi)?;
    let labels: Vec<&str> = k.iter().map(|&x| g.label(x)).collect();
    out.value("subgroup", &format!("{{{}}}", labels.join(", ")));
    out.value("dimension", &ind.dim().to_string());
    out.value("character", &fmt_class_function(&g, &ind.character()));
    let classes: Vec<String> = class_values(&g, &ind.character()).iter().map(fmt_scalar).collect();
    out.value("class values", &format!("({})", classes.join(", ")));
    if check {
        out.report(&check_prop2(&g, &k, &chi)?);
        out.report(&check_comodule_induction(&g, &k, &chi)?);
    }
    Ok(out)
}

fn dump(opts: AlgebraOpts, bare: bool, unicode: bool) -> Run {
    let pres = match (opts.algebra, bare) {
        (AlgebraName::Uq, true) => galilei::uq_bare(opts.a_order),
        _ => presentation(opts)?,
    };
    let mut out = Output::new("dump-presentation", unicode);
    out.input("algebra", algebra_label(opts));
    if matches!(opts.algebra, AlgebraName::Uq) {
        out.input("a_order", opts.a_order).input("bare", bare);
    }
    out.value("", to_document(&pres).trim_end());
    Ok(out)
}

fn run(cli: &Cli) -> Run {
    let u = cli.unicode;
    match &cli.command {
        Command::Normalize { expr, alg } => {
            let algebra = match alg.algebra {
                AlgebraName::Fq => galilei::fq_algebra(),
                AlgebraName::Uq => galilei::uq_algebra(alg.a_order),
            };
            let e = parse(expr, &algebra)?;
            let mut out = Output::new("normalize", u);
            out.input("expr", expr).input("algebra", algebra_label(*alg));
            if matches!(alg.algebra, AlgebraName::Uq) {
                out.input("a_order", alg.a_order);
            }
            out.value("", &algebra.fmt(&e));
            Ok(out)
        }
        Command::Coproduct { expr, alg } => structure_map("coproduct", expr, *alg, u),
        Command::Counit { expr, alg } => structure_map("counit", expr, *alg, u),
        Command::Antipode { expr, alg } => structure_map("antipode", expr, *alg, u),
        Command::Pair { left, right, a_order } => {
            let ctx = context(*a_order)?;
            let h = parse(left, &ctx.uq.algebra)?;
            let f = parse(right, &ctx.fq.algebra)?;
            let mut out = Output::new("pair", u);
            out.input("left", left).input("right", right).input("a_order", a_order);
            out.value("", &ctx.pair(&h, &f).truncate_a(*a_order as i32).to_string());
            Ok(out)
        }
        Command::Act { h, f, side, method, a_order } => {
            let ctx = context(*a_order)?;
            let he = parse(h, &ctx.uq.algebra)?;
            let fe = parse(f, &ctx.fq.algebra)?;
            let side_v = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let result = match method {
                Method::Dual => ctx.act_dual(&he, &fe, side_v).truncate_a(Some(*a_order)),
                Method::Closed => {
                    let ops = GalileiOperators::default();
                    match side_v {
                        Side::Left => ops.act_left_element(&he, &fe)?,
                        Side::Right => ops.act_right_element(&fe, &he)?,
                    }
                }
            };
            let mut out = Output::new("act", u);
            out.input("h", h)
                .input("f", f)
                .input("a_order", a_order)
                .input("side", if side_v == Side::Left { "left" } else { "right" })
                .input("method", if matches!(method, Method::Closed) { "closed" } else { "dual" });
            out.value("", &ctx.fq.fmt(&result));
            Ok(out)
        }
        Command::Coinduce { chi, check } => coinduce(chi, *check, u),
        Command::Verify {
            suite,
            alg,
            max_degree,
            chi,
            presentation,
        } => verify(
            VerifyArgs {
                suite: *suite,
                opts: *alg,
                max_degree: *max_degree,
                chi,
                presentation: presentation.as_deref(),
            },
            u,
        ),
        Command::InduceFinite { group, subgroup, rep, check } => induce_finite(group, subgroup, rep, *check, u),
        Command::DumpPresentation { alg, bare } => dump(*alg, *bare, u),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.render(cli.json));
            if out.failed > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
