//! Starts the HTTP service on an ephemeral port and drives one session
//! with plain HTTP/1.1 requests.
//!
//! For a long-running server use `gencluster serve --port 8080`.

use std::io::{Read, Write};
use std::net::{SocketAddr, TcpStream};

use gencluster::service::serve_in_background;

fn call(addr: SocketAddr, method: &str, path: &str, body: &str) -> std::io::Result<String> {
    let mut stream = TcpStream::connect(addr)?;
    write!(
        stream,
        "{method} {path} HTTP/1.1\r\nHost: localhost\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
        body.len()
    )?;
    let mut raw = String::new();
    stream.read_to_string(&mut raw)?;
    let (head, payload) = raw.split_once("\r\n\r\n").unwrap_or((&raw, ""));
    Ok(format!("{}\n{payload}", head.lines().next().unwrap_or("")))
}

fn main() -> std::io::Result<()> {
    let addr = serve_in_background(0)?;
    println!("listening on {addr}\n");
    let seed = r#"{"n":2,"B":[[0,-1],[2,0]],"d":[2,1],"rho":[["1","2","1"],["1","1"]]}"#;
    let steps = [
        ("POST", "/session", seed),
        ("GET", "/session/1/classgroup", ""),
        ("POST", "/session/1/mutate", r#"{"direction":1}"#),
        ("POST", "/session/1/undo", ""),
        ("POST", "/session/1/undo", ""),
        ("POST", "/realize", r#"{"free_rank":1,"torsion":[2]}"#),
    ];
    for (method, path, body) in steps {
        println!("{method} {path}\n{}\n", call(addr, method, path, body)?);
    }
    Ok(())
}
