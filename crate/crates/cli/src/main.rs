fn main() {
    // Subcommands land here once the library surface is complete.
}
