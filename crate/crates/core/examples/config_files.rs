// Scenario documents: parse, override, serialize, and see what validation
// reports for a broken one.
use shortside::io::{parse_config, serialize_config, ConfigError};

fn main() {
    let doc = "# a quicker version of the default economy\nvarmax = 0.01\nhorizon = 50\n";
    let config = parse_config(doc).expect("valid document");
    print!("{}", serialize_config(&config));

    let broken = "preferences.alpha_one = 0.7\ninitial.p_w = 0\nhorizon = 10\n";
    match parse_config(broken) {
        Err(ConfigError::ValidationFailure(errors)) => {
            for e in errors.violations() {
                println!("rejected: {e}");
            }
        }
        other => println!("unexpected: {other:?}"),
    }
    if let Err(e) = parse_config("alpha_four = 0.1") {
        println!("rejected: {e}");
    }
}
