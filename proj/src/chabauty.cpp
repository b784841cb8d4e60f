namespace grappa {}
