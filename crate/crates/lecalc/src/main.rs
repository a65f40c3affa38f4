use lecalc::{exit_code, run, CliError, Command, RunOptions};
use std::io::Read;
use std::time::Instant;

const USAGE: &str = "\
lecalc — exact Lê cycle / Milnor class workbench

USAGE:
    lecalc le-numbers <job-file> [flags]     Lê numbers of a polynomial germ
    lecalc analyze <job-file> [flags]        full pipeline for a projective hypersurface
    lecalc transform <kind> <job-file>       class-vector transform
                                             (milnor-from-le | le-from-milnor | legacy |
                                              projective | aluffi | fj | csm-from-fj)
    lecalc strata <kind> <job-file>          stratum-table transform
                                             (pp-milnor | csm-from-polar | gamma |
                                              top-class | chi)
    lecalc identities [flags]                verify the combinatorial identities

JOB FILE:
    ring x0 x1 x2 x3 x4        declare variables (degrevlex)
    poly x0*x1                 the polynomial
    param d=2 N=4 seed=7       numeric parameters
    vector 0 0 1               class vector, rationals as p/q
    coords 1 0 0  0 1 1  0 0 1 optional coordinate frame (row-major)
    stratum <id> ... end       stratum blocks: dim, parents, mu, chiF, chiS,
                               eta, csm, polar, mu_perp, closure_degree

FLAGS:
    --seed N          override the seed
    --attempts N      genericity retry cap
    --max-pairs N     Buchberger S-pair cap
    --max-sat-rounds N saturation round cap
    --max-trunc N     local multiplicity truncation cap
    --kmax N --lmax N identity check bounds (<= 64)
    --table           aligned tables for class vectors
    --strict          consistency gates become hard failures (exit 5)

EXIT CODES:
    0 ok, 2 input error, 3 genericity failure, 4 resource cap,
    5 consistency-gate failure (with --strict)
";

fn main() {
    let started = Instant::now();
    let args: Vec<String> = std::env::args().skip(1).collect();
    match dispatch(&args) {
        Ok(report) => {
            print!("{report}");
            eprintln!("elapsed: {:?}", started.elapsed());
        }
        Err(err) => {
            match &err {
                CliError::Gate(report) => {
                    // the report was already built; print it, then fail
                    print!("{report}");
                    eprintln!("error: a consistency gate failed (strict mode)");
                }
                other => eprintln!("error: {other}"),
            }
            eprintln!("elapsed: {:?}", started.elapsed());
            std::process::exit(exit_code(&err));
        }
    }
}

fn dispatch(args: &[String]) -> Result<String, CliError> {
    if args.is_empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help" {
        return Ok(USAGE.to_string());
    }
    let mut positional: Vec<String> = Vec::new();
    let mut opts = RunOptions::default();
    let mut i = 0usize;
    while i < args.len() {
        let arg = &args[i];
        let mut numeric = |opts_field: &mut dyn FnMut(u64)| -> Result<(), CliError> {
            i += 1;
            let value = args
                .get(i)
                .ok_or(CliError::Input(format!("{arg} needs a value")))?;
            let parsed = value
                .parse::<u64>()
                .map_err(|_| CliError::Input(format!("{arg} needs an integer, got `{value}`")))?;
            opts_field(parsed);
            Ok(())
        };
        match arg.as_str() {
            "--table" => opts.table = true,
            "--strict" => opts.strict = true,
            "--seed" => numeric(&mut |v| opts.seed = Some(v))?,
            "--attempts" => numeric(&mut |v| opts.attempts = Some(v as usize))?,
            "--max-pairs" => numeric(&mut |v| opts.max_pairs = Some(v as usize))?,
            "--max-sat-rounds" => numeric(&mut |v| opts.max_sat_rounds = Some(v as usize))?,
            "--max-trunc" => numeric(&mut |v| opts.max_truncation = Some(v as u32))?,
            "--kmax" => numeric(&mut |v| opts.kmax = Some(v as u32))?,
            "--lmax" => numeric(&mut |v| opts.lmax = Some(v as u32))?,
            other if other.starts_with("--") => {
                return Err(CliError::Input(format!("unknown flag `{other}`")))
            }
            other => positional.push(other.to_string()),
        }
        i += 1;
    }

    let (command, file_arg) = match positional.first().map(String::as_str) {
        Some("le-numbers") => (Command::LeNumbers, positional.get(1)),
        Some("analyze") => (Command::Analyze, positional.get(1)),
        Some("transform") => {
            let kind = positional
                .get(1)
                .ok_or(CliError::Input("transform needs a kind".into()))?;
            (Command::Transform(kind.clone()), positional.get(2))
        }
        Some("strata") => {
            let kind = positional
                .get(1)
                .ok_or(CliError::Input("strata needs a kind".into()))?;
            (Command::Strata(kind.clone()), positional.get(2))
        }
        Some("identities") => (Command::Identities, positional.get(1)),
        Some(other) => {
            return Err(CliError::Input(format!(
                "unknown command `{other}` (try --help)"
            )))
        }
        None => return Ok(USAGE.to_string()),
    };

    let job_text = match file_arg {
        None => {
            if command == Command::Identities {
                String::new()
            } else {
                return Err(CliError::Input("this command needs a job file".into()));
            }
        }
        Some(path) if path == "-" => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
            buf
        }
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("reading {path}: {e}")))?,
    };

    let outcome = run(&command, &job_text, &opts)?;
    match outcome.gate_failure {
        Some(_) => Err(CliError::Gate(outcome.report)),
        None => Ok(outcome.report),
    }
}
