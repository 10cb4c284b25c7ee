var label = 64;
function size() {
  label = label + 5;
  return label;
}
size();
size();
print(label);
class entry {
  list(acc) {
    return acc + 15;
  }
  result() {
    return "anchor";
  }
}
let step = new entry();
print(step.list(4096), step.result());
let index = [128, 127, 128, 2];
let rank = 0;
for (let i = 0; i < index.length; i++) {
  rank = rank + index[i];
}
print(rank);
function val(start) {
  const store = start * 3;
  return store - start;
}
print(val(128));
let next = true;
let depth = !next || 10 > 10 && 20 != 2;
if (depth) {
  print("jaguar");
} else if (next) {
  print("hammer silk");
} else {
  print(null);
}
