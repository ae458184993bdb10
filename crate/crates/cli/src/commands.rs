use cubic27::construct::{self, MarkedQuadric};
use cubic27::cubic::{self, CubicForm, SurfaceLines};
use cubic27::picweyl::class_name;
use cubic27::quadric::{self, QAut, QPoint, QuadricModel};
use cubic27::FieldSpec;
use serde_json::{json, Value};

use crate::report::{self, Report};
use crate::{Failure, Model, Opts};

fn field(opts: &Opts, r: &mut Report) -> Result<FieldSpec, Failure> {
    let f: FieldSpec = opts.field.parse().map_err(Failure::bad)?;
    r.field = Some(f.to_string());
    Ok(f)
}

fn parse_cubic(text: Option<&str>, flag: &str, f: FieldSpec, r: &mut Report) -> Result<CubicForm, Failure> {
    let text = text.ok_or_else(|| Failure::BadInput(format!("--{flag} is required")))?;
    r.input(flag, text);
    let c = CubicForm::parse(text, f).map_err(Failure::bad)?;
    if !c.is_smooth() {
        return Err(Failure::BadInput(format!("--{flag} is singular")));
    }
    Ok(c)
}

fn surface(opts: &Opts, r: &mut Report) -> Result<CubicForm, Failure> {
    let f = field(opts, r)?;
    parse_cubic(opts.cubic.as_deref(), "cubic", f, r)
}

fn model(opts: &Opts, r: &mut Report) -> Result<QuadricModel, Failure> {
    let f = field(opts, r)?;
    let m = match opts.model {
        Model::Split => QuadricModel::split(f),
        Model::Weil => {
            let ext = FieldSpec::new(2 * f.k() as u32).map_err(Failure::bad)?;
            QuadricModel::weil(f, ext).map_err(Failure::bad)?
        }
    };
    r.input("model", m.to_string());
    Ok(m)
}

fn line_label(sl: &SurfaceLines, i: usize) -> Value {
    json!({ "index": i, "class": class_name(sl.class_of_line[i]) })
}

pub fn lines(opts: &Opts, r: &mut Report) -> Result<(), Failure> {
    let c = surface(opts, r)?;
    let sl = cubic::find_lines(&c).map_err(Failure::bad)?;
    let k = sl.base().k() as u32;
    let rows: Vec<Value> = sl
        .lines
        .iter()
        .enumerate()
        .map(|(i, l)| {
            json!({
                "index": i,
                "class": class_name(sl.class_of_line[i]),
                "plucker": report::coords(l.coords()),
                "rational": l.frobenius(k) == *l,
            })
        })
        .collect();
    r.result("split_field", sl.ext.to_string());
    r.result("split_degree", sl.split_degree);
    r.result("rational_lines", rows.iter().filter(|v| v["rational"] == json!(true)).count());
    r.result("rows", rows);
    Ok(())
}

pub fn aut(opts: &Opts, r: &mut Report) -> Result<(), Failure> {
    let c = surface(opts, r)?;
    let a = cubic::automorphisms(&c).map_err(Failure::bad)?;
    let gens: Vec<Value> = a
        .group
        .generators()
        .iter()
        .filter_map(|p| a.projectivity_of(p))
        .map(report::projectivity)
        .collect();
    r.result("aut_order", a.order());
    r.result("aut_label", a.label.to_string());
    r.result("generators", gens);
    Ok(())
}

pub fn galois(opts: &Opts, r: &mut Report) -> Result<(), Failure> {
    let c = surface(opts, r)?;
    let sl = cubic::find_lines(&c).map_err(Failure::bad)?;
    let g = cubic::galois_image(&sl);
    r.result("split_degree", sl.split_degree);
    r.result(
        "galois",
        json!({ "order": g.order, "class": g.class.to_string(), "fixed_lines": g.fixed_lines }),
    );
    r.result("perm", g.perm.images());
    Ok(())
}

pub fn iso(opts: &Opts, r: &mut Report) -> Result<(), Failure> {
    let f = field(opts, r)?;
    let c1 = parse_cubic(opts.cubic.as_deref(), "cubic", f, r)?;
    let c2 = parse_cubic(opts.cubic2.as_deref(), "cubic2", f, r)?;
    match cubic::is_isomorphic(&c1, &c2).map_err(Failure::bad)? {
        Some(t) => {
            r.status = "isomorphic".into();
            r.result("witness", report::projectivity(&t));
        }
        None => r.status = "not isomorphic".into(),
    }
    Ok(())
}

fn qpoint(p: &QPoint) -> Value {
    match p {
        QPoint::Split(a, b) => json!([report::coords(a.coords()), report::coords(b.coords())]),
        QPoint::Weil(a) => json!([report::coords(a.coords())]),
    }
}

fn qaut(g: &QAut) -> Value {
    match g {
        QAut::Split { a, b, swap } => {
            json!({ "a": report::projectivity(a), "b": report::projectivity(b), "swap": swap })
        }
        QAut::Weil { a, twist } => json!({ "a": report::projectivity(a), "twist": twist }),
    }
}

pub fn orbits(opts: &Opts, r: &mut Report) -> Result<(), Failure> {
    let m = model(opts, r)?;
    let census = quadric::orbit_census(&m).map_err(Failure::bad)?;
    r.result("order5_generators", census.generators);
    r.result("orbits", census.orbits);
    r.result("general_position", census.general_position);
    r.result("classes", census.classes.len());
    r.result(
        "representatives",
        census.classes.iter().map(|o| Value::Array(o.iter().map(qpoint).collect())).collect::<Vec<_>>(),
    );
    Ok(())
}

pub fn blowdown(opts: &Opts, r: &mut Report) -> Result<(), Failure> {
    let c = surface(opts, r)?;
    let t = construct::order5_automorphism(&c)
        .map_err(Failure::bad)?
        .ok_or_else(|| Failure::violation("no automorphism of order 5"))?;
    let bd = construct::blowdown_data(&c, &t).map_err(Failure::violation)?;
    let sl = cubic::find_lines(&c).map_err(Failure::bad)?;
    r.result("automorphism", report::projectivity(&t));
    r.result("model", bd.marked.model.to_string());
    r.result("points", bd.marked.pts.iter().map(qpoint).collect::<Vec<_>>());
    r.result("action", qaut(&bd.action));
    let (i, j) = bd.invariant_lines;
    r.result("invariant_lines", json!([line_label(&sl, i), line_label(&sl, j)]));
    r.result("contracted_lines", bd.quintuple.iter().map(|&k| line_label(&sl, k)).collect::<Vec<_>>());
    Ok(())
}

pub fn blowup(opts: &Opts, r: &mut Report) -> Result<(), Failure> {
    let m = model(opts, r)?;
    let (g, orbit) = quadric::standard_orbit(&m).map_err(Failure::bad)?;
    r.result("generator", qaut(&g));
    r.result("points", orbit.iter().map(qpoint).collect::<Vec<_>>());
    let mq = MarkedQuadric::new(m, orbit).map_err(Failure::violation)?;
    let c = construct::blowup_to_cubic(&mq).map_err(Failure::violation)?;
    r.result("cubic", c.to_string());
    r.result("cubic_field", c.spec().to_string());
    r.result("smooth", c.is_smooth());
    Ok(())
}
