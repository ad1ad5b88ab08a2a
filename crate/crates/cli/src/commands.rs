use partition_cores::blocks::{
    verify_bar_corollary, verify_bar_theorem, verify_core_theorem, verify_corollary,
};
use partition_cores::enumeration::{bar_cores_of, bar_partitions_of, cores_of, partitions_of};
use partition_cores::{BarPartition, Partition, SweepOptions, VerificationReport};
use serde_json::{json, Value};

use crate::args::{Command, Family, Format, Statement};
use crate::{Failure, CHECK_FAILED, SUCCESS};

type Outcome = Result<u8, Failure>;

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Core {
            partition,
            ell,
            format,
        } => core(&partition, ell, format),
        Command::Quotient {
            partition,
            ell,
            format,
        } => quotient(&partition, ell, format),
        Command::Barcore {
            partition,
            ell,
            format,
        } => barcore(&partition, ell, format),
        Command::Barquotient {
            partition,
            ell,
            format,
        } => barquotient(&partition, ell, format),
        Command::Reconstruct {
            ell,
            core,
            components,
            bar,
            format,
        } => {
            if bar {
                reconstruct_bar(ell, &core, &components, format)
            } else {
                reconstruct(ell, &core, &components, format)
            }
        }
        Command::Verify {
            statement,
            nmax,
            smax,
            tmax,
            levels,
            s,
            t,
            amax,
            jobs,
            fail_fast,
            no_timing,
            format,
        } => {
            if jobs == 0 {
                return Err(Failure::Usage("--jobs must be at least 1".into()));
            }
            let opts = SweepOptions { jobs, fail_fast };
            let mut report = match statement {
                Statement::Theorem1 | Statement::Theorem2 => {
                    if s.is_some() || t.is_some() {
                        return Err(Failure::Usage(
                            "--s/--t apply to corollaries only; use --levels".into(),
                        ));
                    }
                    theorem(statement, nmax, smax, tmax, levels, opts)?
                }
                Statement::Corollary1 | Statement::Corollary2 => {
                    if levels.is_some() || nmax.is_some() {
                        return Err(Failure::Usage(
                            "corollaries take --s, --t, --smax and --amax".into(),
                        ));
                    }
                    corollary(statement == Statement::Corollary2, s, t, smax, amax, opts)?
                }
            };
            if no_timing {
                report.elapsed_seconds = 0.0;
            }
            print_report(&report, format);
            Ok(exit_code(&report))
        }
        Command::Enumerate {
            family,
            n,
            t,
            count,
            format,
        } => enumerate(family, n, t, count, format),
    }
}

fn parse<T>(literal: &str) -> Result<T, Failure>
where
    T: std::str::FromStr<Err = partition_cores::Error>,
{
    literal.parse().map_err(Failure::from)
}

fn level(ell: usize) -> Result<usize, Failure> {
    if ell == 0 {
        return Err(Failure::Usage("--ell must be at least 1".into()));
    }
    Ok(ell)
}

fn emit(format: Format, plain: &[String], value: Value) {
    match format {
        Format::Plain => {
            for line in plain {
                println!("{line}");
            }
        }
        Format::Json => println!("{value}"),
    }
}

fn literals<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(T::to_string).collect()
}

fn core(literal: &str, ell: usize, format: Format) -> Outcome {
    let lambda: Partition = parse(literal)?;
    let ell = level(ell)?;
    let core = lambda.core(ell);
    let weight = lambda.weight(ell);
    emit(
        format,
        &[core.to_string(), format!("weight {weight}")],
        json!({"input": lambda.to_string(), "ell": ell, "core": core.to_string(), "weight": weight}),
    );
    Ok(SUCCESS)
}

fn quotient(literal: &str, ell: usize, format: Format) -> Outcome {
    let lambda: Partition = parse(literal)?;
    let d = lambda.decompose(level(ell)?);
    let mut plain = vec![format!("core {}", d.core), format!("weight {}", d.weight)];
    plain.extend(
        d.components
            .iter()
            .enumerate()
            .map(|(i, c)| format!("component {i} {c}")),
    );
    emit(
        format,
        &plain,
        json!({
            "input": lambda.to_string(),
            "ell": ell,
            "core": d.core.to_string(),
            "weight": d.weight,
            "components": literals(&d.components),
        }),
    );
    Ok(SUCCESS)
}

fn barcore(literal: &str, ell: usize, format: Format) -> Outcome {
    let lambda: BarPartition = parse(literal)?;
    let core = lambda.core(ell)?;
    let weight = lambda.weight(ell)?;
    emit(
        format,
        &[core.to_string(), format!("weight {weight}")],
        json!({"input": lambda.to_string(), "ell": ell, "core": core.to_string(), "weight": weight}),
    );
    Ok(SUCCESS)
}

fn barquotient(literal: &str, ell: usize, format: Format) -> Outcome {
    let lambda: BarPartition = parse(literal)?;
    let q = lambda.quotient(ell)?;
    let mut plain = vec![
        format!("core {}", q.core),
        format!("weight {}", q.weight),
        format!("component 0 {}", q.component0),
    ];
    plain.extend(
        q.components
            .iter()
            .enumerate()
            .map(|(i, c)| format!("component {} {c}", i + 1)),
    );
    emit(
        format,
        &plain,
        json!({
            "input": lambda.to_string(),
            "ell": ell,
            "core": q.core.to_string(),
            "weight": q.weight,
            "component0": q.component0.to_string(),
            "components": literals(&q.components),
        }),
    );
    Ok(SUCCESS)
}

fn reconstruct(ell: usize, core: &str, components: &[String], format: Format) -> Outcome {
    let ell = level(ell)?;
    let core: Partition = parse(core)?;
    let components = components
        .iter()
        .map(|c| parse(c))
        .collect::<Result<Vec<Partition>, _>>()?;
    let lambda = Partition::from_core_and_quotient(&core, &components, ell)?;

    let check = lambda.decompose(ell);
    if check.core != core || check.components != components {
        return Err(Failure::Check(format!(
            "{lambda} does not decompose back at level {ell}"
        )));
    }
    emit(
        format,
        &[lambda.to_string()],
        json!({
            "ell": ell,
            "core": core.to_string(),
            "components": literals(&components),
            "partition": lambda.to_string(),
        }),
    );
    Ok(SUCCESS)
}

fn reconstruct_bar(ell: usize, core: &str, components: &[String], format: Format) -> Outcome {
    let core: BarPartition = parse(core)?;
    let Some((first, rest)) = components.split_first() else {
        return Err(Failure::Usage(
            "--bar needs the bar-partition component first".into(),
        ));
    };
    let component0: BarPartition = parse(first)?;
    let rest = rest
        .iter()
        .map(|c| parse(c))
        .collect::<Result<Vec<Partition>, _>>()?;
    let lambda = BarPartition::from_core_and_quotient(&core, &component0, &rest, ell)?;

    let check = lambda.quotient(ell)?;
    if check.core != core || check.component0 != component0 || check.components != rest {
        return Err(Failure::Check(format!(
            "{lambda} does not decompose back at level {ell}"
        )));
    }
    emit(
        format,
        &[lambda.to_string()],
        json!({
            "ell": ell,
            "core": core.to_string(),
            "component0": component0.to_string(),
            "components": literals(&rest),
            "partition": lambda.to_string(),
        }),
    );
    Ok(SUCCESS)
}

fn theorem(
    statement: Statement,
    nmax: Option<usize>,
    smax: usize,
    tmax: usize,
    levels: Option<Vec<usize>>,
    opts: SweepOptions,
) -> Result<VerificationReport, Failure> {
    let bar = statement == Statement::Theorem2;
    let (s_set, t_set) = match levels {
        Some(levels) => (levels.clone(), levels),
        None if bar => (
            (3..=smax).step_by(2).collect(),
            (3..=tmax).step_by(2).collect(),
        ),
        None => ((2..=smax).collect(), (2..=tmax).collect()),
    };
    let report = if bar {
        verify_bar_theorem(nmax.unwrap_or(28), &s_set, &t_set, opts)?
    } else {
        verify_core_theorem(nmax.unwrap_or(24), &s_set, &t_set, opts)?
    };
    Ok(report)
}

fn corollary(
    bar: bool,
    s: Option<usize>,
    t: Option<usize>,
    smax: usize,
    amax: usize,
    opts: SweepOptions,
) -> Result<VerificationReport, Failure> {
    let admissible = |l: &usize| !bar || l % 2 == 1;
    let pairs: Vec<(usize, usize)> = match (s, t) {
        (Some(s), Some(t)) => vec![(s, t)],
        (Some(s), None) => (1..s).filter(admissible).map(|t| (s, t)).collect(),
        (None, Some(t)) => (t + 1..=smax).filter(admissible).map(|s| (s, t)).collect(),
        (None, None) => (2..=smax)
            .filter(admissible)
            .flat_map(|s| (1..s).filter(admissible).map(move |t| (s, t)))
            .collect(),
    };
    if pairs.is_empty() {
        return Err(Failure::Usage("no (s, t) pair with s > t in range".into()));
    }
    let start = std::time::Instant::now();
    let mut merged: Option<VerificationReport> = None;
    for (s, t) in pairs {
        let report = if bar {
            verify_bar_corollary(s, t, amax, opts)?
        } else {
            verify_corollary(s, t, amax, opts)?
        };
        merged = Some(match merged {
            Some(m) => m.merge(report),
            None => report,
        });
    }
    let mut report = merged.expect("at least one pair");
    report.elapsed_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

fn exit_code(report: &VerificationReport) -> u8 {
    if report.is_verified() {
        SUCCESS
    } else {
        CHECK_FAILED
    }
}

fn print_report(report: &VerificationReport, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
        Format::Plain => {
            let verdict = if report.is_verified() {
                "verified"
            } else {
                "refuted"
            };
            let statement = serde_json::to_value(report.scope.statement).expect("serializes");
            println!("{}: {verdict}", statement.as_str().unwrap_or_default());
            println!("checked {}", report.checked);
            println!("counterexamples {}", report.counterexamples.len());
            for c in &report.counterexamples {
                let lambda = Partition::from_parts(c.partition.clone()).expect("stored sorted");
                println!("  n={} partition={lambda} s={} t={}", c.n, c.s, c.t);
            }
            println!("elapsed_seconds {:.3}", report.elapsed_seconds);
        }
    }
}

fn enumerate(family: Family, n: usize, t: Option<usize>, count: bool, format: Format) -> Outcome {
    let needs_level = matches!(family, Family::Cores | Family::Barcores);
    let t = match (needs_level, t) {
        (true, Some(0)) => return Err(Failure::Usage("--t must be at least 1".into())),
        (true, Some(t)) => t,
        (true, None) => return Err(Failure::Usage("cores need --t".into())),
        (false, Some(_)) => return Err(Failure::Usage("--t applies to cores only".into())),
        (false, None) => 0,
    };
    let items: Vec<String> = match family {
        Family::Partitions => partitions_of(n).map(|p| p.to_string()).collect(),
        Family::Barpartitions => bar_partitions_of(n).map(|p| p.to_string()).collect(),
        Family::Cores => cores_of(n, t).map(|p| p.to_string()).collect(),
        Family::Barcores => bar_cores_of(n, t)?.map(|p| p.to_string()).collect(),
    };
    match (count, format) {
        (true, Format::Plain) => println!("{}", items.len()),
        (true, Format::Json) => println!("{}", json!({"count": items.len()})),
        (false, Format::Plain) => items.iter().for_each(|l| println!("{l}")),
        (false, Format::Json) => println!("{}", json!(items)),
    }
    Ok(SUCCESS)
}
