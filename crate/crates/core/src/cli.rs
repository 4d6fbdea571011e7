//! The `orext` command line: argument parsing, dispatch and output.
//!
//! Exit status 0 on success, 1 on domain errors, 2 on parse and usage
//! errors. Text output has no spaces inside expressions; JSON output is one
//! compact object with sorted keys.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::eigen::{eigenform, eigengroup, EigenGroupDescription};
use crate::error::{Error, Result};
use crate::iso::{decide_isomorphism, AffineWitness, WitnessSet};
use crate::ore::{
    aut_group_description, commutator, evaluate_character, spectrum, AutGroupDescription, ClosedPoints,
    OreAlgebra, OreAutomorphism,
};
use crate::parse::{parse_ore, parse_poly, parse_rational, parse_scalar};
use crate::poly::Poly;
use crate::scalar::{FieldDescriptor, FieldElement};
use crate::weyl::embed_lambda;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "orext", version, about = "Exact computer algebra for Ore extensions K[x][y; f d/dx]")]
pub struct Cli {
    /// Base field: Q or Q(zeta_K).
    #[arg(long, global = true, default_value = "Q")]
    pub field: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenform f = (x-nu)^s g((x-nu)^n).
    Eigenform {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Eigengroup G_f over the chosen field.
    Eigengroup {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Automorphism group of Lambda(f).
    Aut {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Decide Lambda(f) = Lambda(g) over Q, with witnesses g = lambda*f(alpha*x+beta).
    Iso {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Product u*v in Lambda(f).
    Mul {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Commutator uv - vu in Lambda(f).
    Commutator {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Apply x -> lambda*x+mu, y -> lambda^(d-1)*y+p to u.
    Apply {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// Image of u under Lambda(f) -> B1, y -> f*D.
    Embed {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// Prime spectrum of Lambda(f) over Q.
    Spec {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Character x -> a, y -> b applied to u.
    Char {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
}

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Result of one verb: a text rendering and a JSON rendering.
struct Rendered {
    text: String,
    json: Value,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if status == 0 {
                (rendered, String::new())
            } else {
                (String::new(), rendered)
            };
            return Outcome { status, stdout, stderr };
        }
    };
    match execute(&cli) {
        Ok(r) => {
            let mut stdout = match cli.format {
                Format::Text => r.text,
                Format::Json => r.json.to_string(),
            };
            stdout.push('\n');
            Outcome {
                status: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            status: exit_status(&e),
            stdout: String::new(),
            stderr: format!("error: {}\n", e.to_string().replace('\n', " ")),
        },
    }
}

pub fn exit_status(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        _ => 1,
    }
}

fn rational_only(field: &FieldDescriptor, verb: &str) -> Result<()> {
    if field.is_rational() {
        Ok(())
    } else {
        Err(Error::UnsupportedField(format!("{verb} works over Q only, not {field}")))
    }
}

fn execute(cli: &Cli) -> Result<Rendered> {
    let field: FieldDescriptor = cli.field.parse()?;
    let poly = |s: &str| parse_poly(s, &field);
    match &cli.command {
        Command::Eigenform { f } => render_eigenform(&poly(f)?),
        Command::Eigengroup { f } => {
            let group = eigengroup(&poly(f)?, &field)?;
            Ok(Rendered {
                text: eigengroup_text(&group),
                json: eigengroup_json(&group),
            })
        }
        Command::Aut { f } => render_aut(&poly(f)?, &field),
        Command::Iso { f, g } => {
            rational_only(&field, "iso")?;
            render_iso(&poly(f)?, &poly(g)?)
        }
        Command::Mul { f, u, v } => {
            let algebra = OreAlgebra::new(poly(f)?);
            let (u, v) = (parse_ore(u, &algebra)?, parse_ore(v, &algebra)?);
            Ok(result(u.checked_mul(&v)?.to_string()))
        }
        Command::Commutator { f, u, v } => {
            let algebra = OreAlgebra::new(poly(f)?);
            let (u, v) = (parse_ore(u, &algebra)?, parse_ore(v, &algebra)?);
            Ok(result(commutator(&u, &v)?.to_string()))
        }
        Command::Apply { f, lambda, mu, p, u } => {
            let algebra = OreAlgebra::new(poly(f)?);
            let sigma = OreAutomorphism::new(
                &algebra,
                parse_scalar(lambda, &field)?,
                parse_scalar(mu, &field)?,
                poly(p)?,
            )?;
            let image = sigma.apply(&parse_ore(u, &algebra)?)?.to_string();
            Ok(Rendered {
                json: json!({"automorphism": automorphism_json(&sigma), "result": image}),
                text: image,
            })
        }
        Command::Embed { f, u } => {
            rational_only(&field, "embed")?;
            let algebra = OreAlgebra::new(poly(f)?);
            Ok(result(embed_lambda(&algebra, &parse_ore(u, &algebra)?)?.to_string()))
        }
        Command::Spec { f } => {
            rational_only(&field, "spec")?;
            render_spec(&poly(f)?)
        }
        Command::Char { f, a, b, u } => {
            rational_only(&field, "char")?;
            let algebra = OreAlgebra::new(poly(f)?);
            let u = parse_ore(u, &algebra)?;
            let value = evaluate_character(&algebra, &parse_rational(a)?, &parse_rational(b)?, &u)?;
            let value = FieldDescriptor::rational().from_rational(value).to_string();
            Ok(Rendered {
                json: json!({ "value": value }),
                text: value,
            })
        }
    }
}

fn result(text: String) -> Rendered {
    Rendered {
        json: json!({ "result": text }),
        text,
    }
}

fn render_eigenform(f: &Poly) -> Result<Rendered> {
    let form = eigenform(f)?;
    let g = form.g.display_in("t").to_string();
    let mut text = format!("nu={} s={} n={} g={}", form.nu, form.s, form.n, g);
    if !form.leading_coefficient.is_one() {
        text.push_str(&format!(" lc={}", form.leading_coefficient));
    }
    let json = json!({
        "nu": form.nu.to_string(),
        "s": form.s,
        "n": form.n,
        "g": g,
        "leading_coefficient": form.leading_coefficient.to_string(),
    });
    Ok(Rendered { text, json })
}

fn eigengroup_text(group: &EigenGroupDescription) -> String {
    let mut text = format!("kind={}", group.kind.as_str());
    if let Some(order) = group.order {
        text.push_str(&format!(" order={order}"));
    }
    if let Some(l) = &group.generator_lambda {
        text.push_str(&format!(" generator_lambda={l}"));
    }
    text.push_str(&format!(" nu={} field={}", group.nu, group.field));
    text
}

fn eigengroup_json(group: &EigenGroupDescription) -> Value {
    let mut v = json!({
        "kind": group.kind.as_str(),
        "nu": group.nu.to_string(),
        "field": group.field.to_string(),
    });
    if let Some(order) = group.order {
        v["order"] = json!(order);
    }
    if let Some(l) = &group.generator_lambda {
        v["generator_lambda"] = json!(l.to_string());
    }
    v
}

fn automorphism_json(sigma: &OreAutomorphism) -> Value {
    json!({
        "lambda": sigma.lambda().to_string(),
        "mu": sigma.mu().to_string(),
        "p": sigma.p().to_string(),
        "d": sigma.algebra().degree(),
    })
}

const TRANSLATIONS: &str = "s_p: x->x, y->y+p(x), p in K[x]";

fn render_aut(f: &Poly, field: &FieldDescriptor) -> Result<Rendered> {
    let desc = aut_group_description(f, field)?;
    match &desc {
        AutGroupDescription::Semidirect { eigengroup, generator } => {
            let mut text = format!("aut=S*G_f\ntranslations {TRANSLATIONS}\neigengroup {}", eigengroup_text(eigengroup));
            let mut json = json!({
                "kind": "semidirect",
                "translations": TRANSLATIONS,
                "eigengroup": eigengroup_json(eigengroup),
            });
            if let Some(g) = generator {
                text.push_str(&format!("\ngenerator {g} y_scale={}", g.y_scale()));
                let mut gj = automorphism_json(g);
                gj["y_scale"] = json!(g.y_scale().to_string());
                json["generator"] = gj;
            }
            if desc.is_torus() {
                let family = "x->lambda*x+(1-lambda)*nu, y->lambda^(d-1)*y, lambda in K^*";
                text.push_str(&format!("\nfamily {family} d={}", f.degree().unwrap_or(0)));
                json["family"] = json!({ "formula": family, "d": f.degree().unwrap_or(0) });
            }
            Ok(Rendered { text, json })
        }
        AutGroupDescription::Polynomial { families } | AutGroupDescription::Weyl { families } => {
            let kind = if matches!(desc, AutGroupDescription::Polynomial { .. }) {
                "polynomial"
            } else {
                "weyl"
            };
            let mut text = format!("aut={kind} generated by");
            let mut list = Vec::new();
            for fam in families {
                text.push_str(&format!(
                    "\n{}: x->{}, y->{}, {}",
                    fam.name, fam.x_image, fam.y_image, fam.parameters
                ));
                list.push(json!({
                    "name": fam.name,
                    "x": fam.x_image,
                    "y": fam.y_image,
                    "parameters": fam.parameters,
                }));
            }
            Ok(Rendered {
                text,
                json: json!({ "kind": kind, "families": list }),
            })
        }
    }
}

fn witness_text(w: &AffineWitness) -> String {
    format!("lambda={} alpha={} beta={}", w.lambda, w.alpha, w.beta)
}

fn witness_json(w: &AffineWitness) -> Value {
    json!({
        "lambda": w.lambda.to_string(),
        "alpha": w.alpha.to_string(),
        "beta": w.beta.to_string(),
    })
}

fn render_iso(f: &Poly, g: &Poly) -> Result<Rendered> {
    let r = decide_isomorphism(f, g)?;
    let mut text = format!("equivalent={}", r.equivalent);
    let witnesses = match &r.witnesses {
        WitnessSet::Finite(ws) => {
            for w in ws {
                text.push('\n');
                text.push_str(&witness_text(w));
            }
            Value::Array(ws.iter().map(witness_json).collect())
        }
        WitnessSet::Torus(t) => {
            let lambda = format!("{}*alpha^-{}", t.lc_ratio, t.degree);
            text.push_str(&format!(
                "\ntorus alpha in K^* beta=nu_f-alpha*nu_g lambda={lambda} nu_f={} nu_g={}",
                t.nu_f, t.nu_g
            ));
            json!({"torus": {
                "beta_formula": "nu_f - alpha*nu_g",
                "lambda_formula": lambda,
                "nu_f": t.nu_f.to_string(),
                "nu_g": t.nu_g.to_string(),
            }})
        }
        WitnessSet::Unconstrained { lambda } => {
            let shown = lambda.as_ref().map(FieldElement::to_string);
            text.push_str(&format!(
                "\nconstant alpha,beta free lambda={}",
                shown.as_deref().unwrap_or("any")
            ));
            json!({ "constant": { "lambda": shown } })
        }
    };
    Ok(Rendered {
        text,
        json: json!({ "equivalent": r.equivalent, "witnesses": witnesses }),
    })
}

fn render_spec(f: &Poly) -> Result<Rendered> {
    let s = spectrum(f)?;
    let primes: Vec<Value> = s
        .height_one
        .iter()
        .map(|h| {
            let points = match &h.closed_points {
                ClosedPoints::Line { root } => json!({
                    "kind": "line",
                    "root": FieldDescriptor::rational().from_rational(root.clone()).to_string(),
                    "ideals": "(x-root, y-mu), mu in K",
                }),
                ClosedPoints::Symbolic { residue_degree } => json!({
                    "kind": "symbolic",
                    "residue_degree": residue_degree,
                    "ideals": "(p, q), q monic irreducible over K[x]/(p)",
                }),
            };
            json!({
                "p": h.p.to_string(),
                "multiplicity": h.multiplicity,
                "twist": h.twist.automorphism.image_y().to_string(),
                "closed_points": points,
            })
        })
        .collect();
    Ok(Rendered {
        text: s.to_string(),
        json: json!({ "zero_ideal": true, "height_one": primes }),
    })
}
