namespace curve3 { }
