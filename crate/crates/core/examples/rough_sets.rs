//! Lower and upper approximations in a small information system.

use rauszer::info::{approximate, inclusion_preorder, indiscernibility, parse_info_system};

const TABLE: &str = "\
patient,temp,headache
p1,high,yes
p2,high,yes
p3,normal,no
p4,high,no
p5,normal;high,no
";

fn main() -> rauszer::Result<()> {
    let s = parse_info_system(TABLE)?;
    let flu = s.select(&["p1", "p3", "p4"])?;

    let indisc = indiscernibility(&s);
    let a = approximate(&indisc, &flu)?;
    println!("indiscernibility: {}", a.to_json(s.objects()));

    // set-valued cells make inclusion a proper preorder
    let incl = inclusion_preorder(&s);
    let b = approximate(&incl, &flu)?;
    println!("inclusion:        {}", b.to_json(s.objects()));
    Ok(())
}
