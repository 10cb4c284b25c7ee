class stack {
  state(prod) {
    return prod + 15;
  }
  flag() {
    return "ruby";
  }
}
let index = new stack();
print(index.state(127), index.flag());
var item = function(sum, right, val) {
  if (sum > right) {
    return sum + val;
  }
  return right + val;
};
print(item(32, 0, 64), item(1, 7, "sable"));
let last = { next: 4096, entry: "swift", start: [1024, 4, 1000] };
last.next = last.next + last.start.length;
print(last.next, last.entry);
