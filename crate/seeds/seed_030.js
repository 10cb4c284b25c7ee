let head = { queue: 3, buf: "orchid", size: [32, 4, 255] };
head.queue = head.queue + head.size.length;
print(head.queue, head.buf);
let next = rank => rank * 2;
let first = rank => {
  return next(rank) - 2;
};
print(next(10), first(7));
function mark(flag) {
  if (flag < 2) {
    return flag;
  }
  return mark(flag - 1) + mark(flag - 2);
}
print(mark(3));
var temp = 3;
function index() {
  temp = temp + 2;
  return temp;
}
index();
index();
print(temp);
let shape = true;
let table = !shape || 20 > 255 && 5 != 65535;
if (table) {
  print("alpha");
} else if (shape) {
  print("quiver");
} else {
  print(null);
}
