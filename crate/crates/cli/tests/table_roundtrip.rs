use proptest::prelude::*;
use splineqi_cli::table::{Cell, Table};

fn cell() -> impl Strategy<Value = Cell> {
    prop_oneof![
        Just(Cell::Empty),
        any::<i64>().prop_map(Cell::Int),
        (-1e300f64..1e300).prop_map(Cell::Num),
        "[a-z][a-z ,\"()]{0,12}".prop_map(Cell::Text),
    ]
}

proptest! {
    #[test]
    fn csv_round_trips(cols in 1usize..5, rows in proptest::collection::vec(proptest::collection::vec(cell(), 5), 0..8)) {
        let names: Vec<String> = (0..cols).map(|i| format!("c{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut t = Table::new("t", &refs);
        for r in rows {
            // A row made only of empty cells would be an empty line.
            let mut r: Vec<Cell> = r.into_iter().take(cols).collect();
            if r.iter().all(|c| *c == Cell::Empty) {
                r[0] = Cell::Int(0);
            }
            t.push(r);
        }
        let back = Table::from_csv(&t.to_csv().unwrap()).unwrap();
        prop_assert_eq!(back.columns, t.columns);
        prop_assert_eq!(back.rows, t.rows);
    }
}
